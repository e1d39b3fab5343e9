#include "plumb/embedding.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace plumb {

long long dot(const LatticeVector& a, const LatticeVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: vectors of different length");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::optional<LatticeEmbedding> normalized_embedding(const PlumbingGraph& g, const LatticeEmbedding& f)
{
    for (VertexId v : g.vertex_ids()) {
        auto it = f.vectors.find(v);
        if (it == f.vectors.end())
            throw std::invalid_argument("embedding has no vector for vertex " + std::to_string(v));
        if (it->second.size() != f.rank)
            throw std::invalid_argument("vector of vertex " + std::to_string(v) + " has length " +
                                        std::to_string(it->second.size()) + ", rank is " + std::to_string(f.rank));
    }
    for (const auto& [v, x] : f.vectors)
        if (!g.has_vertex(v))
            throw std::invalid_argument("embedding has a vector for unknown vertex " + std::to_string(v));

    for (VertexId v : g.vertex_ids())
        if (dot(f.vectors.at(v), f.vectors.at(v)) != -g.weight(v))
            return std::nullopt;

    // Fix signs along a spanning forest, then check every pair.
    std::map<VertexId, int> sign;
    for (VertexId root : g.vertex_ids()) {
        if (sign.count(root))
            continue;
        sign[root] = 1;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId u : g.neighbors(v)) {
                if (sign.count(u))
                    continue;
                long long d = dot(f.vectors.at(v), f.vectors.at(u));
                if (d != 1 && d != -1)
                    return std::nullopt;
                sign[u] = static_cast<int>(-sign[v] * d);
                queue.push_back(u);
            }
        }
    }
    LatticeEmbedding out = f;
    for (auto& [v, x] : out.vectors)
        if (sign[v] < 0)
            for (auto& c : x)
                c = -c;
    auto ids = g.vertex_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            long long d = dot(out.vectors.at(ids[i]), out.vectors.at(ids[j]));
            if (d != (g.has_edge(ids[i], ids[j]) ? -1 : 0))
                return std::nullopt;
        }
    return out;
}

bool verify_embedding(const PlumbingGraph& g, const LatticeEmbedding& f)
{
    return normalized_embedding(g, f).has_value();
}

namespace {

EmbeddedGraph relabel(const EmbeddedGraph& eg, const std::map<VertexId, VertexId>& to)
{
    EmbeddedGraph out;
    out.embedding.rank = eg.embedding.rank;
    for (VertexId v : eg.graph.vertex_ids()) {
        out.graph.add_vertex(to.at(v), eg.graph.weight(v));
        out.embedding.vectors[to.at(v)] = eg.embedding.vectors.at(v);
    }
    for (auto [a, b] : eg.graph.edges())
        out.graph.add_edge(to.at(a), to.at(b));
    return out;
}

long long coefficient(const EmbeddedGraph& eg, VertexId v, std::size_t i) { return eg.embedding.vectors.at(v).at(i); }

}  // namespace

EmbeddedGraph embed_complementary_legs(const CFSeq& s, const CFSeq& t)
{
    if (!is_complementary(s, t))
        throw std::invalid_argument("embed_complementary_legs: [" + s.str() + "] and [" + t.str() +
                                    "] are not complementary");
    EmbeddedGraph eg;
    eg.graph.add_vertex(0, -2);
    eg.graph.add_vertex(1, -2);
    eg.embedding.rank = 2;
    eg.embedding.vectors[0] = {1, 1};
    eg.embedding.vectors[1] = {1, -1};
    std::vector<VertexId> s_ids{0}, t_ids{1};
    for (bool right : build_diagram(s).steps()) {
        std::size_t e = eg.embedding.rank - 1;
        VertexId grow = right ? s_ids.back() : t_ids.back();
        VertexId shrink = right ? t_ids.back() : s_ids.back();
        VertexId c = eg.graph.next_id();
        eg = gocl(eg, MoveSite{MoveKind::GOCL, e, {grow, shrink}});
        (right ? s_ids : t_ids).push_back(c);
    }
    std::map<VertexId, VertexId> to;
    VertexId next = 0;
    for (VertexId v : s_ids)
        to[v] = next++;
    for (VertexId v : t_ids)
        to[v] = next++;
    return relabel(eg, to);
}

long long default_coeff_bound(const PlumbingGraph& g)
{
    long long m = 0;
    for (VertexId v : g.vertex_ids())
        m = std::max(m, std::abs(g.weight(v)));
    return static_cast<long long>(isqrt(Integer(static_cast<long>(m))).get_si());
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const PlumbingGraph& g, std::size_t rank, long long bound,
                    const std::function<bool(const LatticeEmbedding&)>& accept)
        : g_(g), rank_(rank), bound_(bound), accept_(accept)
    {
        // BFS order per component, each rooted at a vertex of maximum degree.
        std::set<VertexId> seen;
        while (seen.size() < g.vertex_count()) {
            VertexId root = -1;
            for (VertexId v : g.vertex_ids())
                if (!seen.count(v) && (root < 0 || g.degree(v) > g.degree(root)))
                    root = v;
            seen.insert(root);
            std::deque<VertexId> queue{root};
            parent_[root] = -1;
            while (!queue.empty()) {
                VertexId v = queue.front();
                queue.pop_front();
                order_.push_back(v);
                for (VertexId u : g.neighbors(v))
                    if (seen.insert(u).second) {
                        parent_[u] = v;
                        queue.push_back(u);
                    }
            }
        }
    }

    std::optional<LatticeEmbedding> run()
    {
        placed_.clear();
        if (place(0, 0))
            return result_;
        return std::nullopt;
    }

private:
    enum class Target { Zero, MinusOne, PlusMinusOne };

    struct Constraint {
        std::size_t index;  // into placed_
        Target target;
    };

    bool place(std::size_t pos, std::size_t used)
    {
        if (pos == order_.size())
            return finish();
        VertexId v = order_[pos];
        long long norm = -g_.weight(v);
        if (norm < 0)
            return false;
        std::vector<Constraint> cons;
        for (std::size_t j = 0; j < pos; ++j) {
            VertexId u = order_[j];
            Target t = Target::Zero;
            if (parent_[v] == u)
                t = Target::MinusOne;
            else if (g_.has_edge(u, v))
                t = Target::PlusMinusOne;
            cons.push_back({j, t});
        }
        // Suffix norms of placed vectors over [c, used).
        std::vector<std::vector<long long>> suffix(pos, std::vector<long long>(used + 1, 0));
        for (std::size_t j = 0; j < pos; ++j)
            for (std::size_t c = used; c-- > 0;)
                suffix[j][c] = suffix[j][c + 1] + placed_[j][c] * placed_[j][c];
        LatticeVector x(rank_, 0);
        std::vector<long long> partial(pos, 0);
        return coord(pos, used, 0, norm, x, partial, cons, suffix);
    }

    static bool satisfied(long long p, Target t)
    {
        switch (t) {
        case Target::Zero:
            return p == 0;
        case Target::MinusOne:
            return p == -1;
        default:
            return p == 1 || p == -1;
        }
    }

    static bool reachable(long long p, Target t, long long rem, long long suffix)
    {
        auto ok = [&](long long target) {
            long long gap = target - p;
            return gap * gap <= rem * suffix;
        };
        switch (t) {
        case Target::Zero:
            return ok(0);
        case Target::MinusOne:
            return ok(-1);
        default:
            return ok(1) || ok(-1);
        }
    }

    bool coord(std::size_t pos, std::size_t used, std::size_t c, long long rem, LatticeVector& x,
               std::vector<long long>& partial, const std::vector<Constraint>& cons,
               const std::vector<std::vector<long long>>& suffix)
    {
        if (c == used) {
            for (const auto& k : cons)
                if (!satisfied(partial[k.index], k.target))
                    return false;
            return tail(pos, used, used, rem, bound_, x);
        }
        for (const auto& k : cons)
            if (!reachable(partial[k.index], k.target, rem, suffix[k.index][c]))
                return false;
        long long lim = std::min(bound_, static_cast<long long>(isqrt(Integer(static_cast<long>(rem))).get_si()));
        for (long long val = -lim; val <= lim; ++val) {
            x[c] = val;
            for (const auto& k : cons)
                partial[k.index] += val * placed_[k.index][c];
            bool found = coord(pos, used, c + 1, rem - val * val, x, partial, cons, suffix);
            for (const auto& k : cons)
                partial[k.index] -= val * placed_[k.index][c];
            if (found)
                return true;
        }
        x[c] = 0;
        return false;
    }

    // Unused columns: nonnegative, non-increasing, packed to the front.
    bool tail(std::size_t pos, std::size_t used, std::size_t c, long long rem, long long cap, LatticeVector& x)
    {
        if (rem == 0) {
            for (std::size_t i = c; i < rank_; ++i)
                x[i] = 0;
            placed_.push_back(x);
            bool found = place(pos + 1, c);
            placed_.pop_back();
            return found;
        }
        if (c == rank_)
            return false;
        long long lim = std::min(cap, static_cast<long long>(isqrt(Integer(static_cast<long>(rem))).get_si()));
        for (long long val = lim; val >= 1; --val) {
            // Remaining columns can hold at most val^2 each.
            if (static_cast<long long>(rank_ - c) * val * val < rem)
                break;
            x[c] = val;
            if (tail(pos, used, c + 1, rem - val * val, val, x))
                return true;
        }
        x[c] = 0;
        return false;
    }

    bool finish()
    {
        LatticeEmbedding f;
        f.rank = rank_;
        for (std::size_t i = 0; i < order_.size(); ++i)
            f.vectors[order_[i]] = placed_[i];
        auto normal = normalized_embedding(g_, f);
        if (!normal)
            return false;
        if (accept_ && !accept_(*normal))
            return false;
        result_ = *normal;
        return true;
    }

    const PlumbingGraph& g_;
    std::size_t rank_;
    long long bound_;
    const std::function<bool(const LatticeEmbedding&)>& accept_;
    std::vector<VertexId> order_;
    std::map<VertexId, VertexId> parent_;
    std::vector<LatticeVector> placed_;
    LatticeEmbedding result_;
};

}  // namespace

std::optional<LatticeEmbedding> search_embedding(const PlumbingGraph& g, std::size_t rank, long long coeff_bound,
                                                 const std::function<bool(const LatticeEmbedding&)>& accept)
{
    // Semidefinite graphs (e.g. complementary legs joined by a -1) are allowed.
    if (inertia(intersection_matrix(g)).positive != 0)
        throw std::invalid_argument("search_embedding: graph is not negative semidefinite");
    if (coeff_bound < 1)
        throw std::invalid_argument("search_embedding: coefficient bound must be positive");
    return EmbeddingSearch(g, rank, coeff_bound, accept).run();
}

std::vector<VertexId> hits(const EmbeddedGraph& eg, std::size_t i)
{
    std::vector<VertexId> out;
    for (const auto& [v, x] : eg.embedding.vectors)
        if (x.at(i) != 0)
            out.push_back(v);
    return out;
}

std::vector<MoveSite> find_move_sites(const EmbeddedGraph& eg)
{
    std::vector<MoveSite> out;
    for (std::size_t i = 0; i < eg.embedding.rank; ++i) {
        auto h = hits(eg, i);
        bool units = std::all_of(h.begin(), h.end(), [&](VertexId v) { return std::abs(coefficient(eg, v, i)) == 1; });
        if (!units)
            continue;
        if (h.size() == 2) {
            out.push_back({MoveKind::GOCL, i, {h[0], h[1]}});
            out.push_back({MoveKind::GOCL, i, {h[1], h[0]}});
        } else if (h.size() == 3) {
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) {
                    if (b == a)
                        continue;
                    std::size_t c = 3 - a - b;
                    VertexId B = h[b], C = h[c];
                    if (!eg.graph.has_edge(B, C))
                        continue;
                    // The edge's pairing must come from e with the sign e gives it.
                    long long contribution = coefficient(eg, B, i) * coefficient(eg, C, i);
                    if (contribution != dot(eg.embedding.vectors.at(B), eg.embedding.vectors.at(C)))
                        continue;
                    out.push_back({MoveKind::IGOCL, i, {h[a], B, C}});
                }
        }
    }
    return out;
}

bool is_valid_site(const EmbeddedGraph& eg, const MoveSite& site)
{
    if (site.basis_index >= eg.embedding.rank)
        return false;
    for (VertexId v : site.role_ids)
        if (!eg.graph.has_vertex(v))
            return false;
    auto sites = find_move_sites(eg);
    return std::find(sites.begin(), sites.end(), site) != sites.end();
}

namespace {

EmbeddedGraph extended(const EmbeddedGraph& eg)
{
    EmbeddedGraph out = eg;
    ++out.embedding.rank;
    for (auto& [v, x] : out.embedding.vectors)
        x.push_back(0);
    return out;
}

std::string describe(const MoveSite& site)
{
    std::string s = site.kind == MoveKind::GOCL ? "GOCL" : "IGOCL";
    s += " site e" + std::to_string(site.basis_index + 1) + " roles";
    for (VertexId v : site.role_ids)
        s += " " + std::to_string(v);
    return s;
}

}  // namespace

EmbeddedGraph gocl(const EmbeddedGraph& eg, const MoveSite& site)
{
    if (site.kind != MoveKind::GOCL || site.role_ids.size() != 2 || !is_valid_site(eg, site))
        throw MoveError("invalid " + describe(site));
    const std::size_t e = site.basis_index;
    VertexId A = site.role_ids[0], B = site.role_ids[1];
    long long a = coefficient(eg, A, e), b = coefficient(eg, B, e);

    EmbeddedGraph out = extended(eg);
    const std::size_t f = out.embedding.rank - 1;
    VertexId C = out.graph.add_vertex(-2);
    out.graph.add_edge(A, C);
    out.graph.set_weight(B, out.graph.weight(B) - 1);
    LatticeVector u(out.embedding.rank, 0);
    u[e] = -a;
    u[f] = 1;
    out.embedding.vectors[C] = u;
    out.embedding.vectors[B][f] = a * b;
    return out;
}

EmbeddedGraph igocl(const EmbeddedGraph& eg, const MoveSite& site)
{
    if (site.kind != MoveKind::IGOCL || site.role_ids.size() != 3 || !is_valid_site(eg, site))
        throw MoveError("invalid " + describe(site));
    const std::size_t e = site.basis_index;
    VertexId A = site.role_ids[0], B = site.role_ids[1], C = site.role_ids[2];
    long long a = coefficient(eg, A, e), b = coefficient(eg, B, e), c = coefficient(eg, C, e);

    EmbeddedGraph out = extended(eg);
    const std::size_t f = out.embedding.rank - 1;
    VertexId D = out.graph.add_vertex(-2);
    out.graph.remove_edge(B, C);
    out.graph.add_edge(B, D);
    out.graph.add_edge(D, C);
    out.graph.set_weight(A, out.graph.weight(A) - 1);
    LatticeVector d(out.embedding.rank, 0);
    d[e] = -b;
    d[f] = b;
    out.embedding.vectors[D] = d;
    out.embedding.vectors[C][e] = 0;
    out.embedding.vectors[C][f] = c;
    out.embedding.vectors[A][f] = a;
    return out;
}

EmbeddedGraph apply_move(const EmbeddedGraph& eg, const MoveSite& site)
{
    return site.kind == MoveKind::GOCL ? gocl(eg, site) : igocl(eg, site);
}

}  // namespace plumb
