#include "plumb/cfrac.hpp"

#include <algorithm>
#include <sstream>

namespace plumb {

CFSeq::CFSeq(std::vector<long long> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw std::invalid_argument("continued fraction sequence is empty");
    for (long long a : entries_)
        if (a < 2)
            throw std::invalid_argument("continued fraction entry " + std::to_string(a) + " is below 2");
}

CFSeq CFSeq::reversed() const
{
    std::vector<long long> r(entries_.rbegin(), entries_.rend());
    return CFSeq(std::move(r));
}

std::string CFSeq::str() const { return format_sequence(entries_); }

ZeroTailError::ZeroTailError(std::vector<long long> suffix)
    : std::domain_error("continued fraction tail [" + format_sequence(suffix) + "] evaluates to zero"),
      suffix_(std::move(suffix))
{
}

Rational eval_ncf(std::span<const long long> seq)
{
    if (seq.empty())
        throw std::invalid_argument("eval_ncf: empty sequence");
    Rational value(seq.back());
    for (std::size_t i = seq.size() - 1; i-- > 0;) {
        if (value.sign() == 0)
            throw ZeroTailError(std::vector<long long>(seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end()));
        value = Rational(seq[i]) - value.reciprocal();
    }
    return value;
}

std::vector<long long> expand_ncf_general(const Rational& r)
{
    std::vector<long long> out;
    Rational x = r;
    for (;;) {
        if (x.is_integer()) {
            out.push_back(x.num().get_si());
            return out;
        }
        // x = c - 1/y with y > 1, so c = floor(x) + 1.
        Integer c = x.floor() + 1;
        if (!c.fits_slong_p())
            throw std::overflow_error("continued fraction entry does not fit in 64 bits");
        out.push_back(c.get_si());
        x = (Rational(c) - x).reciprocal();
    }
}

CFSeq expand_ncf(const Rational& r)
{
    if (r <= Rational(1))
        throw std::invalid_argument("expand_ncf: value " + r.str() + " is not greater than 1");
    return CFSeq(expand_ncf_general(r));
}

RDiagram::RDiagram(std::vector<DiagramPoint> points) : points_(std::move(points))
{
    if (points_.empty() || !(points_.front() == DiagramPoint{1, -1}))
        throw std::invalid_argument("Riemenschneider diagram must start at (1,-1)");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const auto& p = points_[i - 1];
        const auto& q = points_[i];
        bool right = q.x == p.x + 1 && q.y == p.y;
        bool down = q.x == p.x && q.y == p.y - 1;
        if (!right && !down)
            throw std::invalid_argument("Riemenschneider diagram steps must go right or down");
    }
}

CFSeq RDiagram::column_sequence() const
{
    std::vector<long long> seq(static_cast<std::size_t>(points_.back().x), 1);
    for (const auto& p : points_)
        ++seq[static_cast<std::size_t>(p.x - 1)];
    return CFSeq(std::move(seq));
}

CFSeq RDiagram::row_sequence() const
{
    std::vector<long long> seq(static_cast<std::size_t>(-points_.back().y), 1);
    for (const auto& p : points_)
        ++seq[static_cast<std::size_t>(-p.y - 1)];
    return CFSeq(std::move(seq));
}

std::vector<bool> RDiagram::steps() const
{
    std::vector<bool> out;
    out.reserve(points_.size());
    for (std::size_t i = 1; i < points_.size(); ++i)
        out.push_back(points_[i].x == points_[i - 1].x + 1);
    return out;
}

RDiagram build_diagram(const CFSeq& s)
{
    // Column i holds s[i]-1 points; consecutive columns share one row.
    std::vector<DiagramPoint> pts;
    long long y = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        long long x = static_cast<long long>(i) + 1;
        for (long long c = 0; c < s[i] - 1; ++c) {
            pts.push_back({x, y});
            if (c + 1 < s[i] - 1)
                --y;
        }
    }
    return RDiagram(std::move(pts));
}

CFSeq riemenschneider_dual(const CFSeq& s) { return build_diagram(s).row_sequence(); }

bool is_complementary(const CFSeq& s, const CFSeq& t)
{
    return eval_ncf(s).reciprocal() + eval_ncf(t).reciprocal() == Rational(1);
}

std::vector<long long> parse_sequence(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed sequence entry '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("malformed sequence entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty sequence");
    return out;
}

std::string format_sequence(std::span<const long long> seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

}  // namespace plumb
