#ifndef FLOWROOTS_POLY_HPP
#define FLOWROOTS_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowroots/errors.hpp"

namespace flowroots {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial with exact integer coefficients,
/// stored low-to-high. The zero polynomial has an empty coefficient
/// vector; otherwise the top coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(BigInt c);
    /// x - r
    static IntPoly linear(const BigInt& r);
    /// prod (x - r) over the given roots
    static IntPoly from_roots(const std::vector<BigInt>& roots);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i (0 outside the stored range).
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    IntPoly derivative() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator*=(const IntPoly& o);
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly pow(unsigned k) const;

    /// Plain text like "x^3-5x^2+9x-7"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<BigInt> c_;
    void normalize();
};

IntPoly mul(const IntPoly& p, const IntPoly& q);

/// Thrown by divide_exact when q does not divide p. Carries the nonzero
/// remainder (scaled to integer coefficients if the division ran through
/// rationals; unscaled whenever q is monic up to sign).
struct NonDivisible : Error {
    IntPoly remainder;
    explicit NonDivisible(IntPoly rem);
};

/// Exact quotient p / q; throws NonDivisible if the remainder is nonzero
/// or the quotient is not integral. q must be nonzero.
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

/// true iff q divides p exactly.
bool divides(const IntPoly& q, const IntPoly& p);

struct DeltaSplit {
    BigInt lambda_ceil;   // lambda^* = ceil(mean root)
    BigInt lambda_floor;  // lambda_* = floor(mean root)
    long delta = 0;       // n*mean = (n-delta)*ceil + delta*floor
};

struct RootReport {
    std::map<BigInt, int> integer_roots;  // root -> multiplicity
    IntPoly nonintegral_part;             // cofactor free of integer roots
    bool all_roots_integral = false;
    bool all_roots_real = false;
    std::optional<BigRat> lambda_bar;       // mean of all roots; nullopt when degree 0
    std::optional<DeltaSplit> delta_split;  // present when roots are positive integers
                                            // and the mean is non-integral
};

/// Splits off all integer roots by trial division (candidates are the
/// divisors of the trailing nonzero coefficient, plus 0 for stripped
/// powers of x). Requires p nonzero with leading coefficient +-1.
RootReport integer_roots(const IntPoly& p);

/// Exact test that every complex root of p is real, via a Sturm chain of
/// the square-free part evaluated at +-(1 + max |coeff|). p must be nonzero.
bool all_roots_real(const IntPoly& p);

/// Number of distinct real roots, by the same Sturm chain. Exposed for
/// tests and diagnostics.
int count_distinct_real_roots(const IntPoly& p);

enum class BoundMode { RealCase, IntegerCase };

struct BoundEntry {
    int m = 0;
    BigInt a_m;     // signed-alternating coefficient, equals e_m(roots)
    BigRat bound;   // the lemma's upper bound for a_m
    BigRat slack;   // bound - a_m (>= 0 when the lemma applies)
    bool equality = false;
};

struct BoundReport {
    BoundMode mode = BoundMode::RealCase;
    BigRat lambda_bar;
    std::vector<BoundEntry> entries;        // RealCase: m = 2..n; IntegerCase: m = 2
    std::optional<DeltaSplit> delta_split;  // IntegerCase only
    /// Set when some entry has zero slack: the forced shape
    /// ((x - mean)^n, resp. (x - ceil)^{n-delta} (x - floor)^delta)
    /// was reconstructed and matched the input.
    bool forced_factorization_verified = false;
};

/// Coefficient bounds for monic polynomials with positive real roots
/// (RealCase: a_m <= C(n,m) * mean^m for every m) or positive integer
/// roots with non-integral mean (IntegerCase: the m = 2 bound through the
/// floor/ceil split). Throws PreconditionViolated when the root
/// hypotheses fail, including IntegerCase with an integral mean.
BoundReport check_coefficient_bound(const IntPoly& p, BoundMode mode);

/// Factored display with integer roots split off, e.g.
/// "(x-1)(x-2)^3*(x^3-5x^2+9x-7)". Falls back to plain form when the
/// leading coefficient is not +-1.
std::string factored_form(const IntPoly& p, const std::string& var = "x");

/// gcd of p and q, primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// p divided by gcd(p, p'); carries each root once.
IntPoly square_free_part(const IntPoly& p);

}  // namespace flowroots

#endif
