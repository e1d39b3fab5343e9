#include "plumb/exactnum.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace plumb {

Integer isqrt(const Integer& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        std::string t(s[0] == '+' ? s.substr(1) : s);
        return Integer(t);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Integer Rational::floor() const
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::reciprocal() const
{
    if (q_ == 0)
        throw std::domain_error("reciprocal of zero");
    return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.q_ == 0)
        throw std::domain_error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size())
{
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw std::invalid_argument("IntMatrix must be square");
        for (long v : row)
            a_.emplace_back(v);
    }
}

bool IntMatrix::is_symmetric() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

IntMatrix IntMatrix::negated() const
{
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i)
        r.a_[i] = -a_[i];
    return r;
}

std::size_t SNFResult::corank() const
{
    return static_cast<std::size_t>(
        std::count_if(invariant_factors.begin(), invariant_factors.end(), [](const Integer& d) { return d == 0; }));
}

bool SNFResult::free_cokernel() const
{
    return std::all_of(invariant_factors.begin(), invariant_factors.end(),
                       [](const Integer& d) { return d == 0 || d == 1; });
}

Integer det(const IntMatrix& m)
{
    const std::size_t n = m.dim();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_negative_definite(const IntMatrix& m)
{
    if (!m.is_symmetric())
        throw std::invalid_argument("is_negative_definite: matrix is not symmetric");
    const std::size_t n = m.dim();
    // Without row swaps the k-th Bareiss pivot is the k-th leading principal minor.
    IntMatrix a = m;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        int expected = (k % 2 == 0) ? -1 : 1;
        if (sgn(a(k, k)) != expected)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return true;
}

SNFResult smith_normal_form(const IntMatrix& m)
{
    const std::size_t n = m.dim();
    IntMatrix a = m;
    std::vector<Integer> diag;
    diag.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            // Pivot: minimal nonzero absolute value in the trailing block.
            std::size_t pr = n, pc = n;
            Integer best;
            for (std::size_t i = s; i < n; ++i)
                for (std::size_t j = s; j < n; ++j)
                    if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < best)) {
                        best = abs(a(i, j));
                        pr = i;
                        pc = j;
                    }
            if (pr == n) {
                for (std::size_t rest = s; rest < n; ++rest)
                    diag.emplace_back(0);
                s = n;
                break;
            }
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(s, j), a(pr, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(a(i, s), a(i, pc));

            bool clean = true;
            for (std::size_t i = s + 1; i < n; ++i) {
                if (a(i, s) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, s).get_mpz_t(), a(s, s).get_mpz_t());
                for (std::size_t j = s; j < n; ++j)
                    a(i, j) -= q * a(s, j);
                if (a(i, s) != 0)
                    clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (a(s, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(s, j).get_mpz_t(), a(s, s).get_mpz_t());
                for (std::size_t i = s; i < n; ++i)
                    a(i, j) -= q * a(i, s);
                if (a(s, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility: fold a non-divisible entry of the block into row s.
            std::size_t bad_row = n;
            for (std::size_t i = s + 1; i < n && bad_row == n; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(s, s).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == n) {
                diag.push_back(abs(a(s, s)));
                break;
            }
            for (std::size_t j = s; j < n; ++j)
                a(s, j) += a(bad_row, j);
        }
    }

    std::stable_partition(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; });
    return SNFResult{std::move(diag)};
}

Inertia inertia(const IntMatrix& m)
{
    if (!m.is_symmetric())
        throw std::invalid_argument("inertia: matrix is not symmetric");
    std::size_t n = m.dim();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);

    Inertia result;
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i)
        live[i] = i;

    while (!live.empty()) {
        auto pivot = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a[i][i] != 0; });
        if (pivot == live.end()) {
            // Zero diagonal: a congruence x_i -> x_i + x_j creates a nonzero pivot 2 a_ij.
            bool found = false;
            for (std::size_t ii = 0; ii < live.size() && !found; ++ii)
                for (std::size_t jj = ii + 1; jj < live.size() && !found; ++jj) {
                    std::size_t i = live[ii], j = live[jj];
                    if (a[i][j] == 0)
                        continue;
                    for (std::size_t k : live)
                        a[i][k] += a[j][k];
                    for (std::size_t k : live)
                        a[k][i] += a[k][j];
                    found = true;
                }
            if (!found) {
                result.zero += live.size();
                break;
            }
            continue;
        }
        std::size_t p = *pivot;
        if (a[p][p] > 0)
            ++result.positive;
        else
            ++result.negative;
        live.erase(pivot);
        for (std::size_t i : live) {
            mpq_class f = a[i][p] / a[p][p];
            if (f == 0)
                continue;
            for (std::size_t j : live)
                a[i][j] -= f * a[p][j];
        }
    }
    return result;
}

}  // namespace plumb
