#include "plumb/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace plumb {

namespace {

const std::set<VertexId> kNoNeighbors;

void require_vertex(const PlumbingGraph& g, VertexId v)
{
    if (!g.has_vertex(v))
        throw MoveError("vertex " + std::to_string(v) + " is not in the graph");
}

}  // namespace

PlumbingGraph PlumbingGraph::linear(const std::vector<long long>& weights)
{
    PlumbingGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        g.add_vertex(static_cast<VertexId>(i), weights[i]);
        if (i > 0)
            g.add_edge(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
    }
    return g;
}

VertexId PlumbingGraph::add_vertex(long long weight)
{
    VertexId id = next_id();
    add_vertex(id, weight);
    return id;
}

void PlumbingGraph::add_vertex(VertexId id, long long weight)
{
    if (id < 0)
        throw std::invalid_argument("vertex ids must be nonnegative");
    if (has_vertex(id))
        throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    weights_[id] = weight;
    adj_[id];
}

void PlumbingGraph::remove_vertex(VertexId v)
{
    require_vertex(*this, v);
    for (VertexId u : adj_[v])
        adj_[u].erase(v);
    adj_.erase(v);
    weights_.erase(v);
}

void PlumbingGraph::add_edge(VertexId a, VertexId b)
{
    if (a == b)
        throw std::invalid_argument("loop at vertex " + std::to_string(a));
    require_vertex(*this, a);
    require_vertex(*this, b);
    if (has_edge(a, b))
        throw std::invalid_argument("repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void PlumbingGraph::remove_edge(VertexId a, VertexId b)
{
    if (!has_edge(a, b))
        throw std::invalid_argument("no edge " + std::to_string(a) + "-" + std::to_string(b));
    adj_[a].erase(b);
    adj_[b].erase(a);
}

bool PlumbingGraph::has_edge(VertexId a, VertexId b) const
{
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

long long PlumbingGraph::weight(VertexId v) const
{
    auto it = weights_.find(v);
    if (it == weights_.end())
        throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
    return it->second;
}

void PlumbingGraph::set_weight(VertexId v, long long w)
{
    require_vertex(*this, v);
    weights_[v] = w;
}

std::size_t PlumbingGraph::degree(VertexId v) const { return neighbors(v).size(); }

const std::set<VertexId>& PlumbingGraph::neighbors(VertexId v) const
{
    auto it = adj_.find(v);
    return it == adj_.end() ? kNoNeighbors : it->second;
}

std::size_t PlumbingGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj_)
        twice += nb.size();
    return twice / 2;
}

std::vector<VertexId> PlumbingGraph::vertex_ids() const
{
    std::vector<VertexId> ids;
    ids.reserve(weights_.size());
    for (const auto& [v, w] : weights_)
        ids.push_back(v);
    return ids;
}

std::vector<std::pair<VertexId, VertexId>> PlumbingGraph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [v, nb] : adj_)
        for (VertexId u : nb)
            if (v < u)
                out.emplace_back(v, u);
    return out;
}

bool PlumbingGraph::is_connected() const
{
    if (weights_.empty())
        return true;
    std::set<VertexId> seen{weights_.begin()->first};
    std::vector<VertexId> stack{weights_.begin()->first};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : neighbors(v))
            if (seen.insert(u).second)
                stack.push_back(u);
    }
    return seen.size() == weights_.size();
}

bool PlumbingGraph::is_forest() const
{
    // A graph is a forest iff |E| = |V| - #components.
    std::set<VertexId> seen;
    std::size_t components = 0;
    for (const auto& [start, w] : weights_) {
        if (seen.count(start))
            continue;
        ++components;
        std::vector<VertexId> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : neighbors(v))
                if (seen.insert(u).second)
                    stack.push_back(u);
        }
    }
    return edge_count() + components == weights_.size();
}

PlumbingGraph PlumbingGraph::mirrored() const
{
    PlumbingGraph g = *this;
    for (auto& [v, w] : g.weights_)
        w = -w;
    return g;
}

PlumbingGraph PlumbingGraph::compacted() const
{
    std::map<VertexId, VertexId> rename;
    PlumbingGraph g;
    for (const auto& [v, w] : weights_) {
        VertexId id = static_cast<VertexId>(rename.size());
        rename[v] = id;
        g.add_vertex(id, w);
    }
    for (const auto& [a, b] : edges())
        g.add_edge(rename[a], rename[b]);
    return g;
}

IntMatrix intersection_matrix(const PlumbingGraph& g)
{
    auto ids = g.vertex_ids();
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i)
        index[ids[i]] = i;
    IntMatrix m(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        m(i, i) = static_cast<long>(g.weight(ids[i]));
    for (const auto& [a, b] : g.edges()) {
        m(index[a], index[b]) = 1;
        m(index[b], index[a]) = 1;
    }
    return m;
}

PlumbingGraph blow_down(const PlumbingGraph& g, VertexId v)
{
    require_vertex(g, v);
    long long w = g.weight(v);
    if (w != -1 && w != 1)
        throw MoveError("blow_down: vertex " + std::to_string(v) + " has weight " + std::to_string(w) +
                        ", expected -1 or +1");
    std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    if (nb.size() > 2)
        throw MoveError("blow_down: vertex " + std::to_string(v) + " has degree " + std::to_string(nb.size()));
    if (nb.size() == 2 && g.has_edge(nb[0], nb[1]))
        throw MoveError("blow_down: neighbors of vertex " + std::to_string(v) +
                        " are adjacent; the result would have a multi-edge");
    PlumbingGraph out = g;
    out.remove_vertex(v);
    for (VertexId u : nb)
        out.set_weight(u, out.weight(u) - w);
    if (nb.size() == 2)
        out.add_edge(nb[0], nb[1]);
    return out;
}

std::pair<PlumbingGraph, VertexId> blow_up(const PlumbingGraph& g, const BlowUpSite& site, int sign)
{
    if (sign != -1 && sign != 1)
        throw MoveError("blow_up: sign must be -1 or +1");
    PlumbingGraph out = g;
    VertexId c = out.add_vertex(sign);
    if (const auto* at = std::get_if<BlowUpAtVertex>(&site)) {
        require_vertex(g, at->v);
        out.set_weight(at->v, out.weight(at->v) + sign);
        out.add_edge(at->v, c);
    } else if (const auto* on = std::get_if<BlowUpOnEdge>(&site)) {
        if (!g.has_edge(on->a, on->b))
            throw MoveError("blow_up: no edge " + std::to_string(on->a) + "-" + std::to_string(on->b));
        out.remove_edge(on->a, on->b);
        out.set_weight(on->a, out.weight(on->a) + sign);
        out.set_weight(on->b, out.weight(on->b) + sign);
        out.add_edge(on->a, c);
        out.add_edge(c, on->b);
    }
    return {std::move(out), c};
}

PlumbingGraph zero_absorption(const PlumbingGraph& g, VertexId v)
{
    require_vertex(g, v);
    if (g.weight(v) != 0)
        throw MoveError("zero_absorption: vertex " + std::to_string(v) + " does not have weight 0");
    if (g.degree(v) != 2)
        throw MoveError("zero_absorption: vertex " + std::to_string(v) + " does not have degree 2");
    auto it = g.neighbors(v).begin();
    VertexId u = *it++;
    VertexId w = *it;
    if (g.has_edge(u, w))
        throw MoveError("zero_absorption: neighbors of vertex " + std::to_string(v) + " are adjacent");
    PlumbingGraph out = g;
    out.remove_vertex(v);
    VertexId keep = std::min(u, w), gone = std::max(u, w);
    std::vector<VertexId> moved(out.neighbors(gone).begin(), out.neighbors(gone).end());
    for (VertexId x : moved)
        if (out.has_edge(keep, x))
            throw MoveError("zero_absorption: merging " + std::to_string(u) + " and " + std::to_string(w) +
                            " would create a multi-edge");
    out.set_weight(keep, g.weight(u) + g.weight(w));
    out.remove_vertex(gone);
    for (VertexId x : moved)
        out.add_edge(keep, x);
    return out;
}

ChainReversal reverse_chain(const PlumbingGraph& g, const std::vector<VertexId>& chain)
{
    if (chain.empty())
        throw MoveError("reverse_chain: empty chain");
    std::set<VertexId> members(chain.begin(), chain.end());
    if (members.size() != chain.size())
        throw MoveError("reverse_chain: repeated vertex in chain");
    for (VertexId v : chain)
        require_vertex(g, v);
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            bool adjacent = g.has_edge(chain[i], chain[j]);
            if (adjacent != (j == i + 1))
                throw MoveError("reverse_chain: chain is not an induced path");
        }

    auto outside = [&](VertexId v) {
        std::vector<VertexId> out;
        for (VertexId u : g.neighbors(v))
            if (!members.count(u))
                out.push_back(u);
        return out;
    };
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
        if (!outside(chain[i]).empty())
            throw MoveError("reverse_chain: interior chain vertex " + std::to_string(chain[i]) +
                            " has a neighbor outside the chain");

    std::optional<VertexId> front_nb, back_nb;
    if (chain.size() == 1) {
        auto nb = outside(chain[0]);
        if (nb.size() > 2)
            throw MoveError("reverse_chain: single-vertex chain has more than two outside neighbors");
        if (!nb.empty())
            front_nb = nb[0];
        if (nb.size() == 2)
            back_nb = nb[1];
    } else {
        auto f = outside(chain.front());
        auto b = outside(chain.back());
        if (f.size() > 1 || b.size() > 1)
            throw MoveError("reverse_chain: chain end has more than one outside neighbor");
        if (!f.empty())
            front_nb = f[0];
        if (!b.empty())
            back_nb = b[0];
    }

    std::vector<long long> entries;
    int sign = 0;
    for (VertexId v : chain) {
        long long w = g.weight(v);
        int s = w <= -2 ? -1 : (w >= 2 ? 1 : 0);
        if (s == 0 || (sign != 0 && s != sign))
            throw MoveError("reverse_chain: chain weights must all be <= -2 or all be >= 2");
        sign = s;
        entries.push_back(w < 0 ? -w : w);
    }
    CFSeq dual = riemenschneider_dual(CFSeq(entries));

    PlumbingGraph out = g;
    for (VertexId v : chain)
        out.remove_vertex(v);
    std::vector<VertexId> fresh;
    for (std::size_t i = 0; i < dual.size(); ++i) {
        VertexId id = out.add_vertex(-sign * dual[i]);
        if (i > 0)
            out.add_edge(fresh.back(), id);
        fresh.push_back(id);
    }
    if (front_nb) {
        out.add_edge(fresh.front(), *front_nb);
        out.set_weight(*front_nb, out.weight(*front_nb) - sign);
    }
    if (back_nb) {
        out.add_edge(fresh.back(), *back_nb);
        out.set_weight(*back_nb, out.weight(*back_nb) - sign);
    }

    long long k = static_cast<long long>(chain.size());
    long long j = static_cast<long long>(dual.size());
    StatsDelta delta = sign < 0 ? StatsDelta{j, -k} : StatsDelta{-k, j};
    return ChainReversal{std::move(out), delta, std::move(fresh)};
}

long long i_invariant(const PlumbingGraph& g)
{
    long long total = 0;
    for (VertexId v : g.vertex_ids())
        total += -g.weight(v) - 3;
    return total;
}

GraphStats graph_stats(const PlumbingGraph& g)
{
    Inertia in = inertia(intersection_matrix(g));
    return GraphStats{i_invariant(g), in.positive, in.negative};
}

StarDecomposition star_decompose_at(const PlumbingGraph& g, VertexId node)
{
    require_vertex(g, node);
    if (!g.is_tree())
        throw std::invalid_argument("star_decompose: graph is not a tree");
    if (g.degree(node) > 3)
        throw std::invalid_argument("star_decompose: node has degree above 3");
    StarDecomposition d;
    d.node = node;
    d.node_weight = g.weight(node);
    for (VertexId first : g.neighbors(node)) {
        std::vector<VertexId> ids{first};
        VertexId prev = node, cur = first;
        for (;;) {
            if (g.degree(cur) > 2)
                throw std::invalid_argument("star_decompose: vertex " + std::to_string(cur) +
                                            " branches off the node's legs");
            VertexId next = -1;
            for (VertexId u : g.neighbors(cur))
                if (u != prev)
                    next = u;
            if (next < 0)
                break;
            ids.push_back(next);
            prev = cur;
            cur = next;
        }
        std::reverse(ids.begin(), ids.end());
        std::vector<long long> leg;
        for (VertexId v : ids)
            leg.push_back(-g.weight(v));
        d.legs.push_back(std::move(leg));
        d.leg_ids.push_back(std::move(ids));
    }
    return d;
}

StarDecomposition star_decompose(const PlumbingGraph& g)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("star_decompose: empty graph");
    if (!g.is_tree())
        throw std::invalid_argument("star_decompose: graph is not a tree");
    std::vector<VertexId> branch;
    for (VertexId v : g.vertex_ids()) {
        if (g.degree(v) > 3)
            throw std::invalid_argument("star_decompose: vertex " + std::to_string(v) + " has degree above 3");
        if (g.degree(v) == 3)
            branch.push_back(v);
    }
    if (branch.size() > 1)
        throw std::invalid_argument("star_decompose: graph has more than one vertex of degree 3");
    if (branch.size() == 1)
        return star_decompose_at(g, branch[0]);

    // Path: one leg read from the smaller-id endpoint.
    VertexId start = -1;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    StarDecomposition d;
    std::vector<VertexId> ids{start};
    VertexId prev = -1, cur = start;
    for (;;) {
        VertexId next = -1;
        for (VertexId u : g.neighbors(cur))
            if (u != prev)
                next = u;
        if (next < 0)
            break;
        ids.push_back(next);
        prev = cur;
        cur = next;
    }
    std::vector<long long> leg;
    for (VertexId v : ids)
        leg.push_back(-g.weight(v));
    d.legs.push_back(std::move(leg));
    d.leg_ids.push_back(std::move(ids));
    return d;
}

namespace {

std::string encode_rooted(const PlumbingGraph& g, VertexId v, VertexId parent)
{
    std::vector<std::string> kids;
    for (VertexId u : g.neighbors(v))
        if (u != parent)
            kids.push_back(encode_rooted(g, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(g.weight(v));
    for (const auto& k : kids)
        s += k;
    return s + ")";
}

std::string encode_tree_component(const PlumbingGraph& g, const std::vector<VertexId>& comp)
{
    // Centers by repeated leaf stripping.
    std::map<VertexId, std::size_t> deg;
    for (VertexId v : comp)
        deg[v] = g.degree(v);
    std::vector<VertexId> layer;
    for (VertexId v : comp)
        if (deg[v] <= 1)
            layer.push_back(v);
    std::size_t remaining = comp.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (VertexId v : layer) {
            deg[v] = 0;
            for (VertexId u : g.neighbors(v))
                if (deg[u] > 0 && --deg[u] == 1)
                    next.push_back(u);
        }
        layer = std::move(next);
    }
    std::string best;
    for (VertexId c : layer) {
        std::string s = encode_rooted(g, c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

std::vector<std::vector<VertexId>> components(const PlumbingGraph& g)
{
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId start : g.vertex_ids()) {
        if (seen.count(start))
            continue;
        std::vector<VertexId> comp{start};
        seen.insert(start);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId u : g.neighbors(comp[i]))
                if (seen.insert(u).second)
                    comp.push_back(u);
        out.push_back(std::move(comp));
    }
    return out;
}

// General graphs: colour refinement, then individualisation with backtracking,
// keeping the lexicographically least relabelled adjacency description.
class GeneralCanon {
public:
    explicit GeneralCanon(const PlumbingGraph& g) : ids_(g.vertex_ids()), n_(ids_.size())
    {
        std::map<VertexId, std::size_t> index;
        for (std::size_t i = 0; i < n_; ++i)
            index[ids_[i]] = i;
        adj_.assign(n_, std::vector<bool>(n_, false));
        weight_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            weight_[i] = g.weight(ids_[i]);
        for (const auto& [a, b] : g.edges()) {
            adj_[index[a]][index[b]] = true;
            adj_[index[b]][index[a]] = true;
        }
    }

    std::string run()
    {
        // Initial colours from (weight, degree).
        std::vector<std::pair<long long, std::size_t>> keys(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t d = 0;
            for (std::size_t j = 0; j < n_; ++j)
                d += adj_[i][j];
            keys[i] = {weight_[i], d};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::size_t> colour(n_);
        for (std::size_t i = 0; i < n_; ++i)
            colour[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
        search(refine(colour));
        return best_;
    }

private:
    std::vector<std::size_t> refine(std::vector<std::size_t> colour) const
    {
        for (;;) {
            std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                sig[i].first = colour[i];
                for (std::size_t j = 0; j < n_; ++j)
                    if (adj_[i][j])
                        sig[i].second.push_back(colour[j]);
                std::sort(sig[i].second.begin(), sig[i].second.end());
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<std::size_t> next(n_);
            for (std::size_t i = 0; i < n_; ++i)
                next[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
            std::size_t before = std::set<std::size_t>(colour.begin(), colour.end()).size();
            if (sorted.size() == before)
                return next;
            colour = std::move(next);
        }
    }

    void search(const std::vector<std::size_t>& colour)
    {
        std::map<std::size_t, std::vector<std::size_t>> cells;
        for (std::size_t i = 0; i < n_; ++i)
            cells[colour[i]].push_back(i);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [c, members] : cells)
            if (members.size() > 1 && (!target || members.size() < target->size()))
                target = &members;
        if (!target) {
            emit(colour);
            return;
        }
        for (std::size_t v : *target) {
            auto next = colour;
            // Individualise v: it alone keeps a colour just below its cell.
            for (auto& c : next)
                c *= 2;
            next[v] = colour[v] * 2 + 1;
            for (std::size_t i = 0; i < n_; ++i)
                if (colour[i] == colour[v] && i != v)
                    next[i] = colour[v] * 2;
            search(refine(next));
        }
    }

    void emit(const std::vector<std::size_t>& colour)
    {
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i)
            order[colour[i]] = i;
        std::ostringstream os;
        os << "G" << n_ << ":";
        for (std::size_t i = 0; i < n_; ++i)
            os << weight_[order[i]] << ",";
        os << "|";
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                os << (adj_[order[i]][order[j]] ? '1' : '0');
        std::string s = os.str();
        if (best_.empty() || s < best_)
            best_ = s;
    }

    std::vector<VertexId> ids_;
    std::size_t n_;
    std::vector<std::vector<bool>> adj_;
    std::vector<long long> weight_;
    std::string best_;
};

}  // namespace

std::string canonical_form(const PlumbingGraph& g)
{
    if (g.is_forest()) {
        std::vector<std::string> parts;
        for (const auto& comp : components(g))
            parts.push_back(encode_tree_component(g, comp));
        std::sort(parts.begin(), parts.end());
        std::string s = "F";
        for (const auto& p : parts)
            s += p;
        return s;
    }
    return GeneralCanon(g).run();
}

bool is_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b)
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_form(a) == canonical_form(b);
}

}  // namespace plumb
