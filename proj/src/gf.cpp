#include "lrc/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace lrc {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long gcd_long(long a, long b) {
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long power_long(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (long)4e18 / base) fail(errc::invalid_params, "integer power overflow");
        r *= base;
    }
    return r;
}

long power_capped(long base, long exp, long cap) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> sorted_divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// dense polynomials over the prime field Z_p, ascending degree; used only for
// modulus selection/verification before any Field exists
using PPoly = std::vector<int>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& b, int p) {
    // b monic
    while ((int)a.size() >= (int)b.size()) {
        int c = a.back();
        if (c != 0) {
            size_t off = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) {
                a[off + k] = (int)(((long)a[off + k] - (long)c * b[k]) % p + p) % p;
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() < b.size()) break;
    }
    ptrim(a);
    return a;
}

bool divides(const PPoly& b, const PPoly& f, int p) { return pmod(f, b, p).empty(); }

// exhaustive divisor search; candidates of degree d encoded by idx in [0,p^d)
bool prime_poly_irreducible(const PPoly& f, int p) {
    int deg = (int)f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = power_long(p, d);
        PPoly cand(d + 1);
        cand[d] = 1;
        for (long idx = 0; idx < count; ++idx) {
            long t = idx;
            for (int k = 0; k < d; ++k) {
                cand[k] = (int)(t % p);
                t /= p;
            }
            if (divides(cand, f, p)) return false;
        }
    }
    return true;
}

// smallest monic irreducible of degree m over GF(p), coefficients compared
// low-degree-first
PPoly default_modulus(int p, int m) {
    if (m == 1) return PPoly{0, 1};
    long count = power_long(p, m);
    PPoly cand(m + 1);
    cand[m] = 1;
    for (long idx = 0; idx < count; ++idx) {
        long t = idx;
        for (int k = m - 1; k >= 0; --k) {  // c0 is the most significant comparison key
            cand[k] = (int)(t % p);
            t /= p;
        }
        if (prime_poly_irreducible(cand, p)) return cand;
    }
    fail(errc::reducible_modulus, "no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    q_ = power_long(p, m);

    neg_.resize(q_);
    for (long a = 0; a < q_; ++a) {
        long t = a, r = 0, pk = 1;
        for (int k = 0; k < m_; ++k) {
            int c = (int)(t % p_);
            r += (long)((p_ - c) % p_) * pk;
            pk *= p_;
            t /= p_;
        }
        neg_[a] = (int)r;
    }

    q1_factor_ = factorize(q_ - 1);
    q1_divisors_ = sorted_divisors(q_ - 1);

    // smallest generator of the multiplicative group, using bootstrap arithmetic
    auto raw_pow = [this](int a, long e) {
        int r = 1;
        int b = a;
        while (e > 0) {
            if (e & 1) r = raw_mul(r, b);
            b = raw_mul(b, b);
            e >>= 1;
        }
        return r;
    };
    if (q_ == 2) {
        generator_ = 1;
    } else {
        for (int a = 2; a < q_; ++a) {
            bool ok = true;
            for (auto [r, e] : q1_factor_) {
                (void)e;
                if (raw_pow(a, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = a;
                break;
            }
        }
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    exp_[0] = 1;
    for (long t = 1; t < q_ - 1; ++t) exp_[t] = raw_mul(exp_[t - 1], generator_);
    for (long t = 0; t < q_ - 1; ++t) log_[exp_[t]] = (int)t;

    inv_.assign(q_, 0);
    for (long a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

    if (q_ <= 1024) {
        add_tab_.resize((size_t)q_ * q_);
        mul_tab_.resize((size_t)q_ * q_);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) {
                add_tab_[(size_t)a * q_ + b] = (uint16_t)add_slow((int)a, (int)b);
                mul_tab_[(size_t)a * q_ + b] = (uint16_t)raw_mul((int)a, (int)b);
            }
        add_table_ = add_tab_.data();
        mul_table_ = mul_tab_.data();
    }
}

int Field::add_slow(int a, int b) const {
    if (p_ == 2) return a ^ b;
    long r = 0, pk = 1;
    long x = a, y = b;
    for (int k = 0; k < m_; ++k) {
        r += (x % p_ + y % p_) % p_ * pk;
        pk *= p_;
        x /= p_;
        y /= p_;
    }
    return (int)r;
}

int Field::raw_mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<int> ca = repr_coeffs(a), cb = repr_coeffs(b);
    std::vector<long> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] += (long)ca[i] * cb[j];
    }
    for (auto& c : prod) c %= p_;
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        long c = prod[d] % p_;
        if (c == 0) continue;
        for (int k = 0; k < m_; ++k) {
            prod[d - m_ + k] = ((prod[d - m_ + k] - c * modulus_[k]) % p_ + p_) % p_;
        }
        prod[d] = 0;
    }
    long r = 0, pk = 1;
    for (int k = 0; k < m_; ++k) {
        r += (prod[k] % p_ + p_) % p_ * pk;
        pk *= p_;
    }
    return (int)r;
}

int Field::pow(int a, long long e) const {
    if (e < 0) fail(errc::invalid_params, "negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    if (q_ == 2) return 1;
    long r = (long)(e % (q_ - 1));
    return exp_[((long)log_[a] * r) % (q_ - 1)];
}

FieldElement Field::from_int(long long v) const {
    long c = (long)(v % p_);
    if (c < 0) c += p_;
    return FieldElement(*this, (int)c);
}

long Field::element_order(int a) const {
    if (a == 0) fail(errc::zero_element, "order of zero");
    for (long d : q1_divisors_)
        if (pow(a, d) == 1) return d;
    fail(errc::invalid_params, "order not found");  // unreachable
}

bool Field::is_primitive(int a) const { return a != 0 && element_order(a) == q_ - 1; }

bool Field::is_quadratic_residue(int a) const {
    if (p_ == 2) fail(errc::even_characteristic, "quadratic residuosity needs odd characteristic");
    if (a == 0) fail(errc::zero_element, "residuosity of zero");
    return pow(a, (q_ - 1) / 2) == 1;
}

int Field::square_root(int a) const {
    if (p_ == 2) fail(errc::even_characteristic, "square_root needs odd characteristic");
    if (a == 0) fail(errc::zero_element, "square root of zero");
    if (!is_quadratic_residue(a)) fail(errc::non_residue, "element is not a quadratic residue");
    for (int d = 1; d < q_; ++d)
        if (mul(d, d) == a) return d;  // first hit is the smaller of the pair +-d
    fail(errc::non_residue, "no square root found");  // unreachable
}

int Field::ps_root(int lambda, int s) const {
    if (lambda == 0) fail(errc::zero_element, "ps_root of zero");
    if (s < 1) fail(errc::invalid_params, "s must be positive");
    long mod = q_ - 1;
    if (mod == 1) return lambda;
    // p^s mod (q-1); coprime to q-1 since gcd(p, q-1) = 1
    long e = 1;
    for (int k = 0; k < s; ++k) e = (e * p_) % mod;
    // extended gcd for the inverse exponent
    long t0 = 0, t1 = 1, r0 = mod, r1 = e;
    while (r1 != 0) {
        long qq = r0 / r1;
        long tmp = r0 - qq * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - qq * t1;
        t0 = t1;
        t1 = tmp;
    }
    long einv = ((t0 % mod) + mod) % mod;
    return pow(lambda, einv);
}

std::vector<int> Field::repr_coeffs(int a) const {
    std::vector<int> c(m_);
    long t = a;
    for (int k = 0; k < m_; ++k) {
        c[k] = (int)(t % p_);
        t /= p_;
    }
    return c;
}

int Field::coeffs_repr(const std::vector<int>& c) const {
    long r = 0, pk = 1;
    for (int k = 0; k < m_; ++k) {
        int v = k < (int)c.size() ? c[k] : 0;
        r += (long)v * pk;
        pk *= p_;
    }
    return (int)r;
}

const Field& field_of(int p, int m, const std::vector<int>* modulus, long max_q) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail(errc::invalid_params, "m must be positive");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > max_q / p) fail(errc::field_too_large, "p^m exceeds the configured bound");
        q *= p;
    }
    if (q > max_q) fail(errc::field_too_large, "p^m exceeds the configured bound");

    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        if ((int)mod.size() != m + 1 || mod.back() != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree m");
        for (int c : mod)
            if (c < 0 || c >= p) fail(errc::reducible_modulus, "modulus coefficient out of range");
        if (m == 1) {
            if (mod[0] != 0) fail(errc::reducible_modulus, "modulus for m=1 must be x");
        } else if (!prime_poly_irreducible(mod, p)) {
            fail(errc::reducible_modulus, "modulus is reducible over GF(p)");
        }
    } else {
        mod = default_modulus(p, m);
    }

    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, mod);
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, m, mod))).first;
    }
    return *it->second;
}

}  // namespace lrc
