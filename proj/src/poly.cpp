#include "flowroots/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

namespace flowroots {

namespace {

BigInt binom(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ---- integer factorization (for divisor candidates) ----

BigInt pollard_f(const BigInt& x, const BigInt& c, const BigInt& n) {
    BigInt r = (x * x + c) % n;
    return r;
}

BigInt pollard_rho(const BigInt& n) {
    // n odd composite, no factors below the trial-division limit.
    for (long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = pollard_f(x, c, n);
            y = pollard_f(pollard_f(y, c, n), c, n);
            BigInt diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::map<BigInt, int> factorize(BigInt n) {
    std::map<BigInt, int> f;
    for (long p : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            f[p] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    for (long p = 7; p <= 100000 && n > 1; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            f[p] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) factor_into(n, f);
    return f;
}

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 4u * 1000u * 1000u)
            throw BudgetExceeded("too many divisors of trailing coefficient");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ---- rational long division helpers ----

struct RatPoly {
    std::vector<BigRat> c;  // low-to-high, trailing zeros trimmed
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) r.c.emplace_back(x);
    return r;
}

// Divides a by b over Q; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod_q(const IntPoly& a, const IntPoly& b) {
    RatPoly rem = to_rat(a);
    RatPoly quo;
    int db = b.degree();
    if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, BigRat(0));
    BigRat blead(b.leading());
    while (rem.degree() >= db) {
        int dr = rem.degree();
        BigRat t = rem.c.back() / blead;
        quo.c[dr - db] = t;
        for (int i = 0; i <= db; ++i) rem.c[dr - db + i] -= t * BigRat(b.coeff(i));
        rem.c.pop_back();
        rem.normalize();
    }
    quo.normalize();
    return {quo, rem};
}

// Scales a rational polynomial by the positive lcm of denominators.
IntPoly scale_to_int(const RatPoly& r) {
    BigInt l = 1;
    for (const auto& x : r.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> c;
    c.reserve(r.c.size());
    for (const auto& x : r.c) {
        BigRat v = x * BigRat(l);
        c.emplace_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

// Scales by positive rationals to a primitive integer polynomial, keeping sign.
IntPoly primitive_from_rat(const RatPoly& r) {
    IntPoly p = scale_to_int(r);
    if (p.is_zero()) return p;
    BigInt g = 0;
    for (const auto& x : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(x / g);
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const IntPoly& p) { return primitive_from_rat(to_rat(p)); }

int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

// Sturm chain of a square-free polynomial.
std::vector<IntPoly> sturm_chain(const IntPoly& sf) {
    std::vector<IntPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = divmod_q(chain[chain.size() - 2], chain.back());
        (void)q;
        IntPoly next = -primitive_from_rat(r);
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const BigInt& x) {
    int vars = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sign_of(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

}  // namespace

// ---- IntPoly ----

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::linear(const BigInt& r) {
    IntPoly p;
    p.c_ = {-r, 1};
    return p;
}

IntPoly IntPoly::from_roots(const std::vector<BigInt>& roots) {
    IntPoly p = one();
    for (const auto& r : roots) p *= linear(r);
    return p;
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigInt& IntPoly::leading() const {
    static const BigInt kZero = 0;
    return c_.empty() ? kZero : c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly acc = one(), base = *this;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(i);
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

NonDivisible::NonDivisible(IntPoly rem)
    : Error("polynomial division is not exact; remainder " + rem.to_string()),
      remainder(std::move(rem)) {}

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw PreconditionViolated("division by the zero polynomial");
    if (p.is_zero()) return IntPoly::zero();
    auto [quo, rem] = divmod_q(p, q);
    if (!rem.c.empty()) throw NonDivisible(scale_to_int(rem));
    for (const auto& x : quo.c)
        if (x.get_den() != 1) throw NonDivisible(p);  // exact over Q but not over Z
    std::vector<BigInt> c;
    c.reserve(quo.c.size());
    for (const auto& x : quo.c) c.emplace_back(x.get_num());
    return IntPoly(std::move(c));
}

bool divides(const IntPoly& q, const IntPoly& p) {
    try {
        divide_exact(p, q);
        return true;
    } catch (const NonDivisible&) {
        return false;
    }
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    IntPoly a = primitive_part(p), b = primitive_part(q);
    while (!b.is_zero()) {
        auto [quo, rem] = divmod_q(a, b);
        (void)quo;
        a = std::move(b);
        b = primitive_from_rat(rem);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.degree() <= 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divide_exact(primitive_part(p), g);
}

int count_distinct_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionViolated("zero polynomial has no root count");
    if (p.degree() == 0) return 0;
    IntPoly sf = square_free_part(p);
    auto chain = sturm_chain(sf);
    BigInt bound = 1;
    for (const auto& c : sf.coeffs()) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (a + 1 > bound) bound = a + 1;
    }
    return sign_variations_at(chain, -bound) - sign_variations_at(chain, bound);
}

bool all_roots_real(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionViolated("zero polynomial");
    if (p.degree() <= 1) return true;
    IntPoly sf = square_free_part(p);
    return count_distinct_real_roots(p) == sf.degree();
}

RootReport integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionViolated("zero polynomial");
    BigInt lead = p.leading();
    if (lead != 1 && lead != -1) throw NotMonic();

    RootReport rep;
    rep.all_roots_real = all_roots_real(p);

    std::vector<BigInt> w = p.coeffs();
    // powers of x become roots at 0
    std::size_t shift = 0;
    while (shift < w.size() && w[shift] == 0) ++shift;
    if (shift > 0) {
        rep.integer_roots[0] = static_cast<int>(shift);
        w.erase(w.begin(), w.begin() + static_cast<long>(shift));
    }

    auto try_divide = [&w](const BigInt& r) -> bool {
        // synthetic division; succeeds only when r is a root
        BigInt acc = 0;
        std::vector<BigInt> q(w.size() - 1);
        for (std::size_t i = w.size(); i-- > 1;) {
            acc = acc * r + w[i];
            q[i - 1] = acc;
        }
        if (acc * r + w[0] != 0) return false;
        w = std::move(q);
        return true;
    };

    if (w.size() > 1) {
        BigInt t = w[0] < 0 ? BigInt(-w[0]) : w[0];
        for (const BigInt& d : divisors_of(t)) {
            for (const BigInt& r : {d, BigInt(-d)}) {
                int mult = 0;
                while (w.size() > 1 && try_divide(r)) ++mult;
                if (mult > 0) rep.integer_roots[r] += mult;
                if (w.size() == 1) break;
            }
            if (w.size() == 1) break;
        }
    }

    rep.nonintegral_part = IntPoly(std::move(w));
    rep.all_roots_integral = rep.nonintegral_part.degree() == 0;

    int n = p.degree();
    if (n >= 1) {
        // mean of all roots = -c_{n-1}/(n*c_n)
        BigRat sum = BigRat(-p.coeff(n - 1)) / BigRat(lead);
        rep.lambda_bar = sum / n;
        if (rep.all_roots_integral && rep.lambda_bar->get_den() != 1) {
            bool all_positive = true;
            for (const auto& [r, m] : rep.integer_roots)
                if (r < 1) all_positive = false;
            if (all_positive) {
                DeltaSplit ds;
                BigInt num = rep.lambda_bar->get_num(), den = rep.lambda_bar->get_den();
                mpz_cdiv_q(ds.lambda_ceil.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                ds.lambda_floor = ds.lambda_ceil - 1;
                BigRat delta = BigRat(ds.lambda_ceil) * n - sum;
                ds.delta = static_cast<long>(mpz_get_si(BigInt(delta.get_num()).get_mpz_t()));
                rep.delta_split = ds;
            }
        }
    }
    return rep;
}

BoundReport check_coefficient_bound(const IntPoly& p_in, BoundMode mode) {
    if (p_in.is_zero()) throw PreconditionViolated("zero polynomial");
    IntPoly p = p_in;
    if (p.leading() == -1) p = -p;
    if (p.leading() != 1) throw PreconditionViolated("polynomial is not monic up to sign");
    int n = p.degree();
    if (n < 1) throw PreconditionViolated("constant polynomial has no roots");

    // signed-alternating coefficients: p = sum (-1)^m a_m x^{n-m}, a_m = e_m(roots)
    auto a = [&p, n](int m) -> BigInt {
        BigInt v = p.coeff(n - m);
        return (m % 2) ? BigInt(-v) : v;
    };

    BoundReport rep;
    rep.mode = mode;
    BigRat sum(a(1));
    rep.lambda_bar = sum / n;

    if (mode == BoundMode::RealCase) {
        if (!all_roots_real(p)) throw PreconditionViolated("roots are not all real");
        for (int m = 1; m <= n; ++m)
            if (a(m) <= 0) throw PreconditionViolated("roots are not all positive");
        bool any_eq = false;
        for (int m = 2; m <= n; ++m) {
            BoundEntry e;
            e.m = m;
            e.a_m = a(m);
            BigRat lb = rep.lambda_bar;
            BigRat pw = 1;
            for (int i = 0; i < m; ++i) pw *= lb;
            e.bound = BigRat(binom(n, m)) * pw;
            e.slack = e.bound - BigRat(e.a_m);
            if (e.slack < 0)
                throw InternalInconsistency("real-root coefficient bound violated");
            e.equality = e.slack == 0;
            any_eq = any_eq || e.equality;
            rep.entries.push_back(std::move(e));
        }
        if (any_eq) {
            // equality forces p = (x - mean)^n; verify n^n p == (n x - a_1)^n
            BigInt nn = 1;
            for (int i = 0; i < n; ++i) nn *= n;
            std::vector<BigInt> scaled;
            for (const auto& c : p.coeffs()) scaled.push_back(c * nn);
            IntPoly lin(std::vector<BigInt>{-a(1), BigInt(n)});
            rep.forced_factorization_verified =
                IntPoly(std::move(scaled)) == lin.pow(static_cast<unsigned>(n));
            if (!rep.forced_factorization_verified)
                throw InternalInconsistency("equality case does not match (x - mean)^n");
        }
    } else {
        RootReport rr = integer_roots(p);
        if (!rr.all_roots_integral) throw PreconditionViolated("roots are not all integers");
        for (const auto& [r, m] : rr.integer_roots)
            if (r < 1) throw PreconditionViolated("roots are not all positive");
        if (rep.lambda_bar.get_den() == 1)
            throw PreconditionViolated("mean root is an integer; no delta split exists");
        if (!rr.delta_split)
            throw InternalInconsistency("delta split missing for integer-rooted input");
        DeltaSplit ds = *rr.delta_split;
        rep.delta_split = ds;
        long d = ds.delta;
        BoundEntry e;
        e.m = 2;
        e.a_m = a(2);
        BigInt bound = binom(n - d, 2) * ds.lambda_ceil * ds.lambda_ceil +
                       BigInt(n - d) * d * ds.lambda_ceil * ds.lambda_floor +
                       binom(d, 2) * ds.lambda_floor * ds.lambda_floor;
        e.bound = BigRat(bound);
        e.slack = e.bound - BigRat(e.a_m);
        if (e.slack < 0)
            throw InternalInconsistency("integer-root coefficient bound violated");
        e.equality = e.slack == 0;
        rep.entries.push_back(e);
        if (e.equality) {
            IntPoly forced = IntPoly::linear(ds.lambda_ceil).pow(static_cast<unsigned>(n - d)) *
                             IntPoly::linear(ds.lambda_floor).pow(static_cast<unsigned>(d));
            rep.forced_factorization_verified = p == forced;
            if (!rep.forced_factorization_verified)
                throw InternalInconsistency(
                    "equality case does not match the floor/ceil factorization");
        }
    }
    return rep;
}

std::string factored_form(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    if (p.leading() != 1 && p.leading() != -1) return p.to_string(var);
    RootReport rr = integer_roots(p);
    const IntPoly& rest = rr.nonintegral_part;
    if (rr.integer_roots.empty() && rest.degree() == 0) return rest.to_string(var);
    std::ostringstream os;
    if (rest.degree() == 0 && rest.leading() == -1) os << "-";
    bool printed = false;
    for (const auto& [r, m] : rr.integer_roots) {
        if (r == 0) {
            os << var;
        } else if (r > 0) {
            os << "(" << var << "-" << r.get_str() << ")";
        } else {
            os << "(" << var << "+" << BigInt(-r).get_str() << ")";
        }
        if (m > 1) os << "^" << m;
        printed = true;
    }
    if (rest.degree() > 0) {
        if (printed) os << "*";
        if (rest.leading() < 0) {
            os << "-(" << (-rest).to_string(var) << ")";
        } else {
            os << "(" << rest.to_string(var) << ")";
        }
    }
    return os.str();
}

}  // namespace flowroots
