#include "plumb/torusknot.hpp"

#include "plumb/embedding.hpp"
#include "plumb/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace plumb {

namespace {

// mpz_class has no long long constructor.
Integer big(long long x) { return Integer(static_cast<long>(x)); }

Integer mod_inverse(const Integer& a, const Integer& m)
{
    Integer r;
    Integer aa = a % m;
    if (aa < 0)
        aa += m;
    if (m <= 1 || mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("no inverse of " + aa.get_str() + " mod " + m.get_str());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

long long to_ll(const Integer& x)
{
    if (!x.fits_slong_p())
        throw std::overflow_error("value " + x.get_str() + " does not fit a machine integer");
    return x.get_si();
}

// Appends a path hanging off `anchor` with the given weights; returns its ids, anchor side first.
std::vector<VertexId> hang_chain(PlumbingGraph& g, VertexId anchor, const std::vector<long long>& weights)
{
    std::vector<VertexId> ids;
    VertexId prev = anchor;
    for (long long w : weights) {
        VertexId v = g.add_vertex(w);
        g.add_edge(prev, v);
        ids.push_back(v);
        prev = v;
    }
    return ids;
}

std::vector<long long> negated(const CFSeq& s)
{
    std::vector<long long> out;
    for (long long x : s.entries())
        out.push_back(-x);
    return out;
}

}  // namespace

void validate_surgery(const SurgeryDescription& d)
{
    if (d.p < 2)
        throw std::invalid_argument("p must be at least 2");
    if (d.alpha <= d.p)
        throw std::invalid_argument("alpha must exceed p");
    if (gcd(d.p, d.alpha) != 1)
        throw std::invalid_argument("p and alpha must be coprime");
    if (d.n.sign() <= 0)
        throw std::invalid_argument("surgery coefficient must be positive");
    if (surgery_offset(d).sign() == 0)
        throw SurgeryDegenerate("n = p*alpha: the result is a connected sum of lens spaces, not a star plumbing");
}

Rational surgery_offset(const SurgeryDescription& d) { return d.n - Rational(Integer(d.p * d.alpha)); }

bool surgery_graph_reverses_orientation(const SurgeryDescription& d)
{
    validate_surgery(d);
    return surgery_offset(d).sign() < 0;
}

PlumbingGraph surgery_graph(const SurgeryDescription& d)
{
    validate_surgery(d);
    const Rational N = surgery_offset(d);

    // -1 node, both torus legs read from the node, tail carrying N.
    PlumbingGraph g;
    VertexId node = g.add_vertex(-1);
    Integer p_from_node = d.p - mod_inverse(d.alpha, d.p);  // -alpha^{-1} mod p
    Integer a_from_node = d.alpha - mod_inverse(d.p, d.alpha);
    std::vector<VertexId> leg_p = hang_chain(g, node, negated(expand_ncf(Rational(d.p, p_from_node))));
    std::vector<VertexId> leg_a = hang_chain(g, node, negated(expand_ncf(Rational(d.alpha, a_from_node))));
    std::vector<VertexId> tail = hang_chain(g, node, expand_ncf_general(N));

    if (N.sign() > 0) {
        // Blow down leading +1s, then flip what is left to a negative chain.
        while (!tail.empty() && g.weight(tail.front()) == 1) {
            g = blow_down(g, tail.front());
            tail.erase(tail.begin());
        }
        if (!tail.empty())
            g = reverse_chain(g, tail).graph;
        return g.compacted();
    }

    // N < 0: make the legs positive (node goes to +1), then clear the first tail vertex.
    g = reverse_chain(g, leg_p).graph;
    g = reverse_chain(g, leg_a).graph;
    VertexId t1 = tail.front();
    long long w1 = g.weight(t1);
    if (w1 == 0)
        g = zero_absorption(g, t1);
    else if (w1 == -1)
        g = blow_down(g, t1);
    else
        g = reverse_chain(g, {t1}).graph;
    return g.mirrored().compacted();
}

std::string to_string(QCStatus s)
{
    switch (s) {
    case QCStatus::Complementary:
        return "complementary";
    case QCStatus::PositivelyQC:
        return "positively-qc";
    case QCStatus::NegativelyQC:
        return "negatively-qc";
    case QCStatus::None:
        return "none";
    }
    return "?";
}

QCResult is_quasi_complementary(const CFSeq& a, const CFSeq& b)
{
    if (is_complementary(a, b))
        return {QCStatus::Complementary, std::nullopt};
    const CFSeq* legs[2] = {&a, &b};
    // Appending x to one leg must give exactly the dual of the other.
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& mine = legs[i]->entries();
        const auto dual = riemenschneider_dual(*legs[1 - i]).entries();
        if (dual.size() == mine.size() + 1 && std::equal(mine.begin(), mine.end(), dual.begin()))
            return {QCStatus::NegativelyQC, QCWitness{i, dual.back(), true}};
    }
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& mine = legs[i]->entries();
        if (mine.size() < 2)
            continue;
        const auto dual = riemenschneider_dual(*legs[1 - i]).entries();
        if (dual.size() + 1 == mine.size() && std::equal(dual.begin(), dual.end(), mine.begin()))
            return {QCStatus::PositivelyQC, QCWitness{i, mine.back(), false}};
    }
    return {QCStatus::None, std::nullopt};
}

std::vector<Rational> alpha_p_candidates(const Integer& Q, const Integer& P, long long l_max)
{
    if (!(P > 0 && P < Q))
        throw std::invalid_argument("need 0 < P < Q");
    if (gcd(P, Q) != 1)
        throw std::invalid_argument("P and Q must be coprime");
    std::vector<Rational> out;
    auto push = [&](const Integer& num, const Integer& den) {
        Rational r(num, den);
        if (r.den() == 1)
            return;  // p = 1
        if (std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(r);
    };
    push(Q, P);
    push(Q, Q - P);
    for (long long l = 0; l <= l_max; ++l) {
        push(big(l + 1) * Q + P, Q);
        push(big(l + 2) * Q - P, Q);
    }
    return out;
}

Rational star_euler_number(const StarDecomposition& s)
{
    Rational e(s.node_weight);
    for (const auto& leg : s.legs) {
        if (leg.empty())
            continue;
        std::vector<long long> from_node(leg.rbegin(), leg.rend());
        e += eval_ncf(std::span<const long long>(from_node)).reciprocal();
    }
    return e;
}

std::vector<SurgeryDescription> recognize_surgery(const PlumbingGraph& g)
{
    if (!g.is_tree())
        throw NotRecognizable("graph is not a tree");
    std::vector<VertexId> high, middle;
    for (VertexId v : g.vertex_ids()) {
        if (g.degree(v) > 3)
            throw NotRecognizable("a vertex has more than three neighbors");
        if (g.degree(v) == 3)
            high.push_back(v);
        if (g.degree(v) == 2)
            middle.push_back(v);
    }
    if (high.size() > 1)
        throw NotRecognizable("more than one trivalent vertex");

    std::vector<StarDecomposition> stars;
    if (high.size() == 1)
        stars.push_back(star_decompose(g));
    else
        for (VertexId v : middle)
            stars.push_back(star_decompose_at(g, v));

    const std::string target = canonical_form(g);
    const Integer target_det = abs(det(intersection_matrix(g)));
    std::vector<SurgeryDescription> found;
    bool any_pair = false;
    for (const StarDecomposition& s : stars) {
        std::vector<CFSeq> legs;  // leaf-first, as decomposed
        std::vector<Integer> nums;
        Integer max_num = 0;
        for (const auto& leg : s.legs) {
            if (leg.empty() || std::any_of(leg.begin(), leg.end(), [](long long x) { return x < 2; }))
                continue;
            legs.emplace_back(leg);
            nums.push_back(eval_ncf(legs.back()).num());
            max_num = std::max(max_num, nums.back());
        }
        // Both torus legs survive every case up to duality, which keeps numerators.
        auto is_leg_num = [&](const Integer& x) { return std::find(nums.begin(), nums.end(), x) != nums.end(); };
        Rational e;
        try {
            e = star_euler_number(s);
        } catch (const ZeroTailError&) {
            continue;
        }

        std::vector<Rational> ratios;
        for (std::size_t i = 0; i < legs.size(); ++i)
            for (std::size_t j = i + 1; j < legs.size(); ++j) {
                if (is_quasi_complementary(legs[i].reversed(), legs[j].reversed()).status == QCStatus::None)
                    continue;
                any_pair = true;
                for (std::size_t side : {i, j}) {
                    Rational v = eval_ncf(legs[side]);
                    long long l_max = to_ll(max_num / v.num()) + 1;
                    for (const Rational& r : alpha_p_candidates(v.num(), v.den(), l_max))
                        if (std::find(ratios.begin(), ratios.end(), r) == ratios.end())
                            ratios.push_back(r);
                }
            }

        for (const Rational& ratio : ratios) {
            Integer p = ratio.den(), alpha = ratio.num();
            if (!is_leg_num(p) || !is_leg_num(alpha))
                continue;
            Rational inv_pa = Rational(Integer(1), Integer(p * alpha));
            // e = -1/(p alpha) - 1/N, or its negative when the graph is mirrored.
            std::vector<Rational> offsets;
            if ((e + inv_pa).sign() < 0)
                offsets.push_back(-(e + inv_pa).reciprocal());
            if ((e - inv_pa).sign() != 0)
                offsets.push_back((e - inv_pa).reciprocal());
            for (const Rational& N : offsets) {
                SurgeryDescription d{p, alpha, N + Rational(Integer(p * alpha))};
                if (N.sign() == 0 || d.n.sign() <= 0 || d.n.num() != target_det)
                    continue;
                if (std::find(found.begin(), found.end(), d) != found.end())
                    continue;
                PlumbingGraph h = surgery_graph(d);
                if (h.vertex_count() == g.vertex_count() && canonical_form(h) == target)
                    found.push_back(d);
            }
        }
    }
    if (!any_pair)
        throw NotRecognizable("no two legs are quasi-complementary");
    return found;
}

// ---- families ----

SeqTag parse_seq_tag(const std::string& text)
{
    static const std::map<std::string, SeqTag> names{{"P", SeqTag::P}, {"Q", SeqTag::Q}, {"R", SeqTag::R},
                                                     {"S", SeqTag::S}, {"T", SeqTag::T}, {"U", SeqTag::U}};
    auto it = names.find(text);
    if (it == names.end())
        throw std::invalid_argument("unknown sequence '" + text + "' (expected P, Q, R, S, T or U)");
    return it->second;
}

Integer seq(SeqTag tag, long long i, long long k)
{
    if (i < 0)
        throw std::invalid_argument("sequence index must be nonnegative");
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const Integer K = big(k);
    Integer a = 1, b, c, m;
    switch (tag) {
    case SeqTag::P:
        b = 4, c = 19, m = 5;
        break;
    case SeqTag::Q:
        b = 2, c = 9, m = 5;
        break;
    case SeqTag::R:
        b = 3, c = 17, m = 6;
        break;
    case SeqTag::S:
        b = 2, c = 2 * K + 7, m = K + 4;
        break;
    case SeqTag::T:
        b = K + 2, c = K * K + 6 * K + 7, m = K + 4;
        break;
    case SeqTag::U:
        b = 3, c = 14, m = 5;
        break;
    }
    if (i == 0)
        return a;
    if (i == 1)
        return b;
    for (long long j = 2; j < i; ++j) {
        Integer next = m * c - b;
        b = c;
        c = next;
    }
    return c;
}

std::vector<LensPair> certified_lens_pairs(long long max_p)
{
    std::vector<LensPair> out;
    for (long long p = 2; p <= max_p; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            Integer Q = big(p) * big(p);
            for (long long s : {-1LL, 1LL}) {
                Integer P = big(p) * big(q) + big(s);
                P %= Q;
                if (P <= 0 || gcd(P, Q) != 1)
                    continue;
                bool dup = std::any_of(out.begin(), out.end(), [&](const LensPair& x) { return x.P == P && x.Q == Q; });
                if (!dup)
                    out.push_back({P, Q});
            }
        }
    return out;
}

namespace {

std::vector<long long> param_values(const std::optional<long long>& fixed, long long range)
{
    if (fixed)
        return {*fixed};
    std::vector<long long> v;
    for (long long x = 0; x <= range; ++x)
        v.push_back(x);
    return v;
}

Rational frac(const Integer& a, const Integer& b) { return Rational(a, b); }

void closed_form(TheoremRow& row)
{
    const Integer pq = row.p * row.q;
    auto k = [&] { return big(row.params.at("k")); };
    auto l = [&] { return row.params.at("l"); };
    switch (row.family) {
    case 1:
        if (l() == 1) {
            Integer b = k() + 3;
            Integer top = 2 * b * b - 2 * b + 1;
            row.r = frac(top * top, 2 * b * b - b + 1);
            row.note = "subfamily T(b-1, 2b-1)";
        }
        break;
    case 2: {
        Integer b = k() + 2;
        Integer m = big(l() + 2);
        Integer top = m * b * b - 1;
        row.r = frac(top * top, m * b * b + b - 1);
        row.note = "subfamily T(b, b(l+2)-1)";
        break;
    }
    case 6:
        row.r = Rational(pq) - frac(3, 7);
        break;
    case 7:
    case 11:
        row.r = Rational(pq) - frac(5, 7);
        break;
    case 9:
    case 10:
        row.r = Rational(pq) - frac(2 * k() + 3, k() + 2);
        break;
    default:
        break;
    }
}

void push_row(std::vector<TheoremRow>& out, int family, std::map<std::string, long long> params, const Integer& p,
              const Integer& q)
{
    TheoremRow row{family, std::move(params), p, q, std::nullopt, ""};
    closed_form(row);
    out.push_back(std::move(row));
}

std::vector<Integer> inverses(const std::vector<Integer>& values, const Integer& m)
{
    std::vector<Integer> out;
    if (m < 3)
        return out;  // no A with 1 < A < m
    for (const Integer& v : values) {
        if (gcd(v, m) != 1)
            continue;
        Integer a = mod_inverse(v, m);
        if (a > 1 && std::find(out.begin(), out.end(), a) == out.end())
            out.push_back(a);
    }
    return out;
}

}  // namespace

std::vector<TheoremRow> enumerate_theorem_families(const TheoremFamily& f, long long range)
{
    if (f.index < 1 || f.index > 16)
        throw std::invalid_argument("family index must be in 1..16");
    if (range < 0)
        throw std::invalid_argument("range must be nonnegative");
    for (const auto* x : {&f.k, &f.l, &f.n})
        if (*x && **x < 0)
            throw std::invalid_argument("parameters must be nonnegative");
    if (f.index >= 12 && f.lens.empty())
        throw std::invalid_argument("families 12-16 need caller-certified (P, Q) pairs");
    for (const LensPair& lp : f.lens)
        if (!(lp.P > 0 && lp.P < lp.Q) || gcd(lp.P, lp.Q) != 1)
            throw std::invalid_argument("lens pairs need coprime 0 < P < Q");

    const auto ks = param_values(f.k, range);
    const auto ls = param_values(f.l, range);
    const auto ns = param_values(f.n, range);
    std::vector<TheoremRow> out;
    const int fam = f.index;

    if (fam <= 4 || fam == 9 || fam == 10) {
        for (long long k : ks)
            for (long long l : ls) {
                Integer K = big(k), L = big(l), p, q;
                switch (fam) {
                case 1:
                    p = K + 2, q = (L + 1) * (K + 2) + 1;
                    break;
                case 2:
                    p = K + 2, q = (L + 2) * (K + 2) - 1;
                    break;
                case 3:
                    p = 2 * K + 3, q = (L + 1) * (2 * K + 3) + 2;
                    break;
                case 4:
                    p = 2 * K + 3, q = (L + 2) * (2 * K + 3) - 2;
                    break;
                case 9:
                    p = seq(SeqTag::S, l + 1, k), q = seq(SeqTag::S, l + 2, k);
                    break;
                default:
                    p = seq(SeqTag::T, l + 1, k), q = seq(SeqTag::T, l + 2, k);
                    break;
                }
                push_row(out, fam, {{"k", k}, {"l", l}}, p, q);
            }
    } else if (fam == 5) {
        for (long long k : ks) {
            Integer K = big(k);
            push_row(out, fam, {{"k", k}}, K * K + 7 * K + 11, K * K * K + 12 * K * K + 45 * K + 51);
        }
    } else if (fam <= 11) {
        SeqTag tag = fam == 6 ? SeqTag::P : fam == 7 ? SeqTag::Q : fam == 8 ? SeqTag::R : SeqTag::U;
        for (long long l : ls)
            push_row(out, fam, {{"l", l}}, seq(tag, l + 1), seq(tag, l + 2));
    } else if (fam <= 13) {
        for (const LensPair& lp : f.lens)
            for (long long n : ns) {
                Integer m = big(n + 1) * lp.Q + lp.P;
                for (const Integer& A : inverses({lp.Q, big(n) * lp.Q + lp.P}, m)) {
                    if (fam == 12) {
                        push_row(out, fam, {{"n", n}}, A, m);
                    } else {
                        for (long long l : ls)
                            push_row(out, fam, {{"n", n}, {"l", l}}, m, big(l + 1) * m + A);
                    }
                }
            }
    } else if (fam <= 15) {
        for (const LensPair& lp : f.lens) {
            Integer fl = lp.Q / lp.P;  // floor, both positive
            Integer ce = fl + (lp.Q % lp.P != 0 ? 1 : 0);
            for (const Integer& B : inverses({lp.P * ce - lp.Q, lp.Q - lp.P * fl}, lp.P)) {
                if (fam == 14) {
                    push_row(out, fam, {}, B, lp.P);
                } else {
                    for (long long l : ls)
                        push_row(out, fam, {{"l", l}}, lp.P, big(l + 1) * lp.P + B);
                }
            }
        }
    } else {
        for (const LensPair& lp : f.lens) {
            if (lp.P < 2)
                continue;
            push_row(out, fam, {}, lp.P, lp.Q);
            out.back().note = "integral: r in {PQ-1, PQ, PQ+1}";
        }
    }
    return out;
}

std::vector<SurgeryDescription> closure_surgeries(std::size_t max_vertices)
{
    std::vector<SurgeryDescription> out;
    for (FamilyTag tag : all_family_tags()) {
        if (base_graph(tag).graph.vertex_count() > max_vertices)
            continue;
        for (const EmbeddedGraph& eg : enumerate_closure(tag, max_vertices)) {
            std::vector<SurgeryDescription> ds;
            try {
                ds = recognize_surgery(eg.graph);
            } catch (const NotRecognizable&) {
                continue;
            }
            for (auto& d : ds)
                if (std::find(out.begin(), out.end(), d) == out.end())
                    out.push_back(std::move(d));
        }
    }
    return out;
}

std::size_t resolve_pending(std::vector<TheoremRow>& rows, const std::vector<SurgeryDescription>& found)
{
    std::size_t filled = 0;
    for (TheoremRow& row : rows) {
        if (row.r)
            continue;
        for (const SurgeryDescription& d : found)
            if (d.p == row.p && d.alpha == row.q && (!row.r || d.n < *row.r))
                row.r = d.n;
        if (row.r) {
            row.note = "found by closure search";
            ++filled;
        }
    }
    return filled;
}

IdentityReport sequence_identities(long long max_index)
{
    IdentityReport rep;
    auto check = [&](bool ok, const std::string& what, long long j) {
        ++rep.checked;
        if (!ok)
            rep.failures.push_back(what + " fails at j = " + std::to_string(j));
    };
    for (long long j = 0; j <= max_index; ++j) {
        Integer p0 = seq(SeqTag::P, j), p1 = seq(SeqTag::P, j + 1), p2 = seq(SeqTag::P, j + 2);
        check(p2 * p0 - p1 * p1 == 3, "P_{j+2} P_j - P_{j+1}^2 = 3", j);
        check(Rational(Integer(p0 * p1)) - frac(3, 7) == frac((p0 + p1) * (p0 + p1), 7), "P_j P_{j+1} - 3/7 = (P_j + P_{j+1})^2/7",
              j);
        Integer q0 = seq(SeqTag::Q, j), q1 = seq(SeqTag::Q, j + 1);
        check(Rational(Integer(q0 * q1)) - frac(5, 7) == frac((q0 + q1) * (q0 + q1), 7), "Q_j Q_{j+1} - 5/7 = (Q_j + Q_{j+1})^2/7",
              j);
        Integer u0 = seq(SeqTag::U, j), u1 = seq(SeqTag::U, j + 1);
        check(Rational(Integer(u0 * u1)) - frac(5, 7) == frac((u0 + u1) * (u0 + u1), 7), "U_j U_{j+1} - 5/7 = (U_j + U_{j+1})^2/7",
              j);
    }
    return rep;
}

std::vector<ForbiddenHit> scan_3223_trivalent(std::size_t max_len, long long max_k)
{
    // All z with length <= max_len whose dual also has length <= max_len:
    // the dual has length sum(z_i - 2) + 1.
    std::vector<std::vector<long long>> zs;
    std::vector<long long> cur;
    auto grow = [&](auto&& self, long long budget) -> void {
        if (!cur.empty())
            zs.push_back(cur);
        if (cur.size() == max_len)
            return;
        for (long long extra = 0; extra <= budget; ++extra) {
            cur.push_back(2 + extra);
            self(self, budget - extra);
            cur.pop_back();
        }
    };
    grow(grow, static_cast<long long>(max_len) - 1);

    std::vector<ForbiddenHit> hits;
    for (const auto& zv : zs) {
        CFSeq z(zv);
        CFSeq zeta = riemenschneider_dual(z);
        if (zeta.size() < 2)
            continue;
        CFSeq short_leg(std::vector<long long>(zeta.entries().begin() + 1, zeta.entries().end()));
        for (long long k = 0; k <= max_k; ++k) {
            std::vector<long long> y{2, k + 2, zv[0] + 1};
            y.insert(y.end(), zv.begin() + 1, zv.end());
            CFSeq long_leg(y);
            QCStatus s = is_quasi_complementary(short_leg, long_leg).status;
            if (s == QCStatus::PositivelyQC || s == QCStatus::NegativelyQC)
                hits.push_back({k, z, zeta});
        }
    }
    return hits;
}

}  // namespace plumb
