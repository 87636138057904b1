#include "lrc/polyring.hpp"

#include <algorithm>

namespace lrc {

namespace {
void check_same(const Polynomial& a, const Polynomial& b) {
    if (&a.field() != &b.field()) fail(errc::field_mismatch, "polynomials over different fields");
}
}  // namespace

long long Polynomial::int_code() const {
    long long code = 0;
    long long scale = 1;
    for (int x : c_) {
        code += scale * x;
        if (scale > (long long)2e17 / f_->q()) fail(errc::invalid_params, "int_code overflow");
        scale *= f_->q();
    }
    return code;
}

Polynomial poly_const(const Field& f, int repr) {
    return Polynomial(f, std::vector<int>{repr});
}

Polynomial poly_x(const Field& f) { return Polynomial(f, std::vector<int>{0, 1}); }

Polynomial poly_binomial(const Field& f, int eta, int mu_repr) {
    std::vector<int> c(eta + 1, 0);
    c[0] = f.neg(mu_repr);
    c[eta] = 1;
    return Polynomial(f, std::move(c));
}

Polynomial poly_xn_minus(const Field& f, long n, int lambda_repr) {
    std::vector<int> c(n + 1, 0);
    c[0] = f.neg(lambda_repr);
    c[n] = 1;
    return Polynomial(f, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const Field& f = a.field();
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff((int)i), b.coeff((int)i));
    return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const Field& f = a.field();
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff((int)i), b.coeff((int)i));
    return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    std::vector<int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        int ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            int bj = b.coeffs()[j];
            if (bj == 0) continue;
            c[i + j] = f.add(c[i + j], f.mul(ai, bj));
        }
    }
    return Polynomial(f, std::move(c));
}

Polynomial scalar_mul(const Polynomial& a, int repr) {
    const Field& f = a.field();
    std::vector<int> c = a.coeffs();
    for (int& x : c) x = f.mul(x, repr);
    return Polynomial(f, std::move(c));
}

Polynomial shift_up(const Polynomial& a, int k) {
    if (a.is_zero()) return a;
    std::vector<int> c(a.coeffs().size() + k, 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + k);
    return Polynomial(a.field(), std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const Field& f = a.field();
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    int lead_inv = f.inv(b.leading());
    std::vector<int> rem = a.coeffs();
    std::vector<int> quo(a.degree() - b.degree() + 1, 0);
    const std::vector<int>& bc = b.coeffs();
    for (int d = a.degree(); d >= b.degree(); --d) {
        int c = rem[d];
        if (c == 0) continue;
        int qc = f.mul(c, lead_inv);
        quo[d - b.degree()] = qc;
        int off = d - b.degree();
        for (size_t k = 0; k < bc.size(); ++k) {
            if (bc[k] == 0) continue;
            rem[off + k] = f.sub(rem[off + k], f.mul(qc, bc[k]));
        }
    }
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

bool divides(const Polynomial& b, const Polynomial& a) { return poly_mod(a, b).is_zero(); }

Polynomial make_monic(const Polynomial& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return scalar_mul(a, a.field().inv(a.leading()));
}

Polynomial reciprocal(const Polynomial& a) {
    std::vector<int> c(a.coeffs().rbegin(), a.coeffs().rend());
    return Polynomial(a.field(), std::move(c));
}

Polynomial constacyclic_reduce(const Polynomial& a, long n, int lambda_repr) {
    const Field& f = a.field();
    std::vector<int> c(n, 0);
    // x^{n+e} = lambda x^e in the residue ring; degrees < 2n suffice here but
    // fold repeatedly to stay general
    for (int d = 0; d <= a.degree(); ++d) {
        int v = a.coeff(d);
        if (v == 0) continue;
        long e = d;
        while (e >= n) {
            e -= n;
            v = f.mul(v, lambda_repr);
        }
        c[e] = f.add(c[e], v);
    }
    return Polynomial(f, std::move(c));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return make_monic(a);
}

Polynomial poly_powmod(const Polynomial& b, long long e, const Polynomial& f) {
    if (e < 0) fail(errc::invalid_params, "negative exponent");
    Polynomial r = poly_const(f.field(), 1);
    Polynomial base = poly_mod(b, f);
    while (e > 0) {
        if (e & 1) r = poly_mod(r * base, f);
        base = poly_mod(base * base, f);
        e >>= 1;
    }
    return r;
}

DigitExpansion digits(long t, int p) {
    if (t < 0) fail(errc::invalid_params, "digits of negative value");
    DigitExpansion d{t, p, {}};
    if (t == 0) {
        d.digits.push_back(0);
        return d;
    }
    while (t > 0) {
        d.digits.push_back((int)(t % p));
        t /= p;
    }
    return d;
}

long v_weight(long t, int p) {
    long v = 1;
    for (int dj : digits(t, p).digits) v *= dj + 1;
    return v;
}

namespace {
// C(a,b) mod p for 0 <= b <= a < p
long small_binom_mod(long a, long b, long p) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    long num = 1, den = 1;
    for (long i = 1; i <= b; ++i) {
        num = num * ((a - i + 1) % p) % p;
        den = den * (i % p) % p;
    }
    // den^(p-2) mod p
    long inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return num * inv % p;
}
}  // namespace

int binom_mod_p(long n, long k, long p) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    while (n > 0 || k > 0) {
        long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        r = r * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return (int)r;
}

Polynomial binomial_power(const Field& f, int eta, int mu_repr, long t) {
    if (eta < 1) fail(errc::invalid_params, "eta must be positive");
    if (t < 0) fail(errc::invalid_params, "negative exponent");
    std::vector<int> c((size_t)(eta * t) + 1, 0);
    int neg_mu = f.neg(mu_repr);
    for (long j = 0; j <= t; ++j) {
        int b = binom_mod_p(t, j, f.p());
        if (b == 0) continue;
        c[(size_t)(eta * j)] = f.mul(b, f.pow(neg_mu, t - j));
    }
    return Polynomial(f, std::move(c));
}

Factorization factor_over_field(const Polynomial& f, long budget) {
    if (f.is_zero()) fail(errc::invalid_params, "cannot factor the zero polynomial");
    const Field& F = f.field();
    long q = F.q();

    // worst-case candidate count for the full search
    long worst = 0;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        worst += power_capped(q, d, budget);
        if (worst > budget) fail(errc::budget_exceeded, "factorization search space exceeds budget");
    }

    Factorization out;
    out.unit = f.leading();
    Polynomial rest = make_monic(f);

    while (rest.degree() >= 1) {
        bool found = false;
        for (int d = 1; 2 * d <= rest.degree() && !found; ++d) {
            long count = power_long(q, d);
            std::vector<int> cand(d + 1, 0);
            cand[d] = 1;
            for (long idx = 0; idx < count; ++idx) {
                long t = idx;
                for (int k = 0; k < d; ++k) {
                    cand[k] = (int)(t % q);
                    t /= q;
                }
                Polynomial c(F, cand);
                // smallest divisor by (degree, code) is irreducible
                if (divides(c, rest)) {
                    int mult = 0;
                    while (divides(c, rest)) {
                        rest = divmod(rest, c).first;
                        ++mult;
                    }
                    out.factors.emplace_back(c, mult);
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            out.factors.emplace_back(rest, 1);  // irreducible remainder
            break;
        }
    }
    // factors found in increasing (degree, code) order already; a later pass of
    // the outer loop can only find factors of equal or larger degree, and equal
    // degree factors appear in code order, so no sort is needed. Keep one for
    // safety against future edits.
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [](const auto& a, const auto& b) {
                         if (a.first.degree() != b.first.degree())
                             return a.first.degree() < b.first.degree();
                         return a.first.int_code() < b.first.int_code();
                     });
    return out;
}

}  // namespace lrc
