#pragma once

// Rational surgeries on positive torus knots as star-shaped plumbings:
// forward construction, quasi-complementary legs, recognition, and the
// list of torus knot families with their integer sequences.

#include "plumb/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plumb {

/// S^3_n(T(p, alpha)) with 2 <= p < alpha coprime and n > 0.
struct SurgeryDescription {
    Integer p;
    Integer alpha;
    Rational n;

    friend bool operator==(const SurgeryDescription& a, const SurgeryDescription& b)
    {
        return a.p == b.p && a.alpha == b.alpha && a.n == b.n;
    }
};

/// Throws std::invalid_argument on a bad description; SurgeryDegenerate if n = p*alpha.
void validate_surgery(const SurgeryDescription& d);

class SurgeryDegenerate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// n - p*alpha.
Rational surgery_offset(const SurgeryDescription& d);

/// Negative definite plumbing of S^3_n(T(p, alpha)) when n > p*alpha, and of
/// the orientation reversal otherwise. |det| equals the numerator of n.
/// Ids are 0..V-1 with the node (or middle vertex of a path) at 0.
PlumbingGraph surgery_graph(const SurgeryDescription& d);
/// True when surgery_graph(d) bounds -S^3_n rather than S^3_n.
bool surgery_graph_reverses_orientation(const SurgeryDescription& d);

enum class QCStatus { Complementary, PositivelyQC, NegativelyQC, None };
std::string to_string(QCStatus s);

/// Which leg changes and how: an entry appended at the free end (negative
/// case) or the free-end entry removed (positive case).
struct QCWitness {
    std::size_t leg = 0;  // 0 = first argument, 1 = second
    long long entry = 0;
    bool appended = false;

    friend bool operator==(const QCWitness&, const QCWitness&) = default;
};

struct QCResult {
    QCStatus status = QCStatus::None;
    std::optional<QCWitness> witness;
};

/// Legs are listed from the node outward, so the last entry is the free end
/// where a vertex may be added or removed.
QCResult is_quasi_complementary(const CFSeq& a, const CFSeq& b);

/// Possible alpha/p for a leg whose entries, read from the free end towards
/// the node, evaluate to Q/P. Values with denominator 1 are dropped;
/// duplicates removed, first occurrence kept.
/// Throws std::invalid_argument unless 0 < P < Q and gcd(P, Q) = 1.
std::vector<Rational> alpha_p_candidates(const Integer& Q, const Integer& P, long long l_max);

/// Rational Euler number of a star: node weight plus the sum over legs of
/// 1 / (value of the leg read from the node, with its negated weights).
Rational star_euler_number(const StarDecomposition& s);

class NotRecognizable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every description d with surgery_graph(d) isomorphic to g.
/// Throws NotRecognizable if g is not star-shaped with at most three legs, or
/// no two legs are quasi-complementary.
std::vector<SurgeryDescription> recognize_surgery(const PlumbingGraph& g);

// ---- torus knot families ----

enum class SeqTag { P, Q, R, S, T, U };
SeqTag parse_seq_tag(const std::string& text);

/// Value at index i. k is only read by S and T.
Integer seq(SeqTag tag, long long i, long long k = 0);

/// Caller-certified lens space L(Q, P) bounding a rational ball.
struct LensPair {
    Integer P;
    Integer Q;
};

/// L(p^2, pq - 1) and L(p^2, pq + 1) for coprime 0 < q < p <= max_p, reduced
/// to 0 < P < Q. These are known to bound rational balls.
std::vector<LensPair> certified_lens_pairs(long long max_p);

struct TheoremFamily {
    int index = 1;  // 1..16
    std::optional<long long> k;
    std::optional<long long> l;
    std::optional<long long> n;  // families 12, 13
    std::vector<LensPair> lens;  // families 12..15 (and 16 as raw (P, Q))
};

struct TheoremRow {
    int family = 0;
    std::map<std::string, long long> params;
    Integer p;
    Integer q;
    std::optional<Rational> r;  // nullopt: pending
    std::string note;
};

/// Rows for every unset parameter in 0..range. Closed-form r where known.
/// Throws std::invalid_argument on a bad index, negative parameters, or a
/// family 12..16 without lens data.
std::vector<TheoremRow> enumerate_theorem_families(const TheoremFamily& f, long long range);

/// Surgeries found among the growth closures of every base graph up to
/// max_vertices vertices.
std::vector<SurgeryDescription> closure_surgeries(std::size_t max_vertices);
/// Fills pending r values from `found` where (p, q) matches; returns how many were filled.
std::size_t resolve_pending(std::vector<TheoremRow>& rows, const std::vector<SurgeryDescription>& found);

struct IdentityReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// P_{j+2} P_j - P_{j+1}^2 = 3, Q_j Q_{j+1} - 5/7 = (Q_j + Q_{j+1})^2 / 7,
/// P_j P_{j+1} - 3/7 = (P_j + P_{j+1})^2 / 7 and U_j U_{j+1} - 5/7 = (U_j + U_{j+1})^2 / 7,
/// for j = 0..max_index (indices shifted to where each identity starts).
IdentityReport sequence_identities(long long max_index = 40);

/// Exhaustive check of the trivalent-vertex configuration in the (-3,-2,-2,-3)
/// growth family where a short leg (zeta_2..) meets (2, k+2, z_1+1, z_2..):
/// returns every (k, z) with z and its dual of length <= max_len for which the
/// two legs, both listed from the node, are positively or negatively
/// quasi-complementary.
struct ForbiddenHit {
    long long k;
    CFSeq z;
    CFSeq zeta;
};
std::vector<ForbiddenHit> scan_3223_trivalent(std::size_t max_len, long long max_k);

}  // namespace plumb
