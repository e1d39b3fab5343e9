#pragma once

// Negative continued fractions [a1, ..., an]^- = a1 - 1/(a2 - 1/(... - 1/an)),
// Riemenschneider staircase diagrams and duality of complementary sequences.

#include "plumb/exactnum.hpp"

#include <span>
#include <string>
#include <vector>

namespace plumb {

/// A canonical expansion: nonempty, every entry >= 2.
class CFSeq {
public:
    CFSeq() = default;
    /// Throws std::invalid_argument if empty or some entry is below 2.
    explicit CFSeq(std::vector<long long> entries);
    CFSeq(std::initializer_list<long long> entries) : CFSeq(std::vector<long long>(entries)) {}

    const std::vector<long long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    long long operator[](std::size_t i) const { return entries_[i]; }
    long long front() const { return entries_.front(); }
    long long back() const { return entries_.back(); }

    CFSeq reversed() const;
    std::string str() const;

    friend bool operator==(const CFSeq&, const CFSeq&) = default;
    friend auto operator<=>(const CFSeq&, const CFSeq&) = default;

private:
    std::vector<long long> entries_;
};

/// Evaluation failed because an intermediate tail evaluated to zero.
class ZeroTailError : public std::domain_error {
public:
    ZeroTailError(std::vector<long long> suffix);
    const std::vector<long long>& suffix() const { return suffix_; }

private:
    std::vector<long long> suffix_;
};

/// Right-to-left evaluation of an arbitrary integer sequence.
Rational eval_ncf(std::span<const long long> seq);
inline Rational eval_ncf(const CFSeq& s) { return eval_ncf(std::span<const long long>(s.entries())); }

/// Unique all->=2 expansion of r > 1 (ceiling-and-reciprocate).
CFSeq expand_ncf(const Rational& r);

/// Expansion [n1, n2, ..., nk]^- of an arbitrary rational with n2..nk >= 2 and n1 unrestricted.
std::vector<long long> expand_ncf_general(const Rational& r);

struct DiagramPoint {
    long long x;  // column, >= 1
    long long y;  // row, <= -1
    friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Staircase of lattice points starting at (1,-1), each step right or down.
/// Columns encode the first sequence, rows the second.
class RDiagram {
public:
    explicit RDiagram(std::vector<DiagramPoint> points);

    const std::vector<DiagramPoint>& points() const { return points_; }
    /// Entry i is one more than the number of points in column i+1.
    CFSeq column_sequence() const;
    /// Entry j is one more than the number of points in row -(j+1).
    CFSeq row_sequence() const;

    /// Step kinds between consecutive points: true for a step right.
    std::vector<bool> steps() const;

private:
    std::vector<DiagramPoint> points_;
};

RDiagram build_diagram(const CFSeq& s);
CFSeq riemenschneider_dual(const CFSeq& s);
bool is_complementary(const CFSeq& s, const CFSeq& t);

/// Parses "5,3,2,2".
std::vector<long long> parse_sequence(const std::string& text);
std::string format_sequence(std::span<const long long> seq);

}  // namespace plumb
