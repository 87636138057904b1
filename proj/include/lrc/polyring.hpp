#ifndef LRC_POLYRING_HPP
#define LRC_POLYRING_HPP

#include <utility>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

// Dense polynomial over a field; coeffs are element reprs, ascending degree,
// normalized (no trailing zeros, zero polynomial = empty vector).
class Polynomial {
  public:
    Polynomial() : f_(nullptr) {}
    explicit Polynomial(const Field& f) : f_(&f) {}
    Polynomial(const Field& f, std::vector<int> coeffs) : f_(&f), c_(std::move(coeffs)) {
        normalize();
    }

    const Field& field() const { return *f_; }
    const std::vector<int>& coeffs() const { return c_; }
    // degree of the zero polynomial is the sentinel -1 (stands in for -inf)
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    int coeff(int d) const { return d >= 0 && d < (int)c_.size() ? c_[d] : 0; }
    int leading() const { return c_.empty() ? 0 : c_.back(); }
    int weight() const {
        int w = 0;
        for (int x : c_) w += x != 0;
        return w;
    }

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.f_ == b.f_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // canonical integer encoding sum c_i * q^i; orders factor lists
    // (only valid for small degrees, checked)
    long long int_code() const;

  private:
    const Field* f_;
    std::vector<int> c_;
};

Polynomial poly_const(const Field& f, int repr);
Polynomial poly_x(const Field& f);
// x^eta - mu as a polynomial (the degree-eta binomial)
Polynomial poly_binomial(const Field& f, int eta, int mu_repr);
// x^n - lambda
Polynomial poly_xn_minus(const Field& f, long n, int lambda_repr);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scalar_mul(const Polynomial& a, int repr);
Polynomial shift_up(const Polynomial& a, int k);  // multiply by x^k

// a = q*b + r with deg r < deg b; DivisionByZero / FieldMismatch
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);
Polynomial make_monic(const Polynomial& a);
// x^deg(a) * a(1/x)
Polynomial reciprocal(const Polynomial& a);
// reduction mod x^n - lambda: coefficient at n+e folds into e with a lambda factor
Polynomial constacyclic_reduce(const Polynomial& a, long n, int lambda_repr);

Polynomial poly_gcd(Polynomial a, Polynomial b);  // monic gcd
// b^e mod f (e >= 0)
Polynomial poly_powmod(const Polynomial& b, long long e, const Polynomial& f);

// radix-p digit expansion of t (ascending significance; t=0 -> [0])
struct DigitExpansion {
    long value;
    int base;
    std::vector<int> digits;
};
DigitExpansion digits(long t, int p);

// V_t = prod (t_j + 1) over the base-p digits of t
long v_weight(long t, int p);

// C(n,k) mod p by Lucas' theorem
int binom_mod_p(long n, long k, long p);

// (x^eta - mu)^t expanded via Lucas coefficients: the x^{eta j} coefficient is
// C(t,j) * (-mu)^{t-j}; the number of nonzero coefficients is v_weight(t,p)
Polynomial binomial_power(const Field& f, int eta, int mu_repr, long t);

// complete factorization into monic irreducibles (times a unit), found by
// exhaustive trial division over monic polynomials in increasing
// (degree, integer-code) order; deterministic. Budget counts candidate
// divisors tried; BudgetExceeded if the worst-case search space is larger.
struct Factorization {
    int unit;  // leading coefficient of the input
    std::vector<std::pair<Polynomial, int>> factors;
};
Factorization factor_over_field(const Polynomial& f, long budget = 1 << 22);

}  // namespace lrc

#endif
