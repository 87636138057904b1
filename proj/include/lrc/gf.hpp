#ifndef LRC_GF_HPP
#define LRC_GF_HPP

#include <cstdint>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

class FieldElement;

// GF(p^m) with a fixed monic irreducible modulus over GF(p). Elements are
// encoded as integers in [0,q): the residue-class polynomial
// c0 + c1 x + ... + c_{m-1} x^{m-1} is stored as c0 + c1 p + ... + c_{m-1} p^{m-1}.
//
// Fields are interned (one instance per (p,m,modulus)) and immutable after
// construction, so FieldElement can carry a plain pointer and identity
// comparison doubles as field-equality. All lookup tables are filled during
// construction; every later access is read-only, hence thread-safe.
class Field {
  public:
    static constexpr long kDefaultMaxQ = 1 << 20;

    int p() const { return p_; }
    int m() const { return m_; }
    long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // repr-level arithmetic (hot paths); inputs must lie in [0,q)
    int add(int a, int b) const {
        if (add_table_) return add_table_[(size_t)a * q_ + b];
        return add_slow(a, b);
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const {
        if (mul_table_) return mul_table_[(size_t)a * q_ + b];
        if (a == 0 || b == 0) return 0;
        long t = (long)log_[a] + log_[b];
        if (t >= q_ - 1) t -= q_ - 1;
        return exp_[t];
    }
    int inv(int a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero");
        return inv_[a];
    }
    int pow(int a, long long e) const;

    FieldElement elem(int repr) const;
    FieldElement zero() const;
    FieldElement one() const;
    // embeds an integer via the prime subfield (handles negatives, so -1 maps
    // to the additive inverse of 1)
    FieldElement from_int(long long v) const;

    // smallest primitive element, by repr
    int generator() const { return generator_; }

    long element_order(int a) const;           // ZeroElement
    bool is_primitive(int a) const;
    bool is_quadratic_residue(int a) const;    // EvenCharacteristic, ZeroElement
    int square_root(int a) const;              // NonResidue, ZeroElement, EvenCharacteristic
    int ps_root(int lambda, int s) const;      // ZeroElement

    const std::vector<long>& q1_divisors() const { return q1_divisors_; }
    const std::vector<std::pair<long, int>>& q1_factorization() const { return q1_factor_; }

    // coefficient view of a repr over GF(p), ascending degree, length m
    std::vector<int> repr_coeffs(int a) const;
    int coeffs_repr(const std::vector<int>& c) const;

  private:
    friend const Field& field_of(int, int, const std::vector<int>*, long);
    Field(int p, int m, std::vector<int> modulus);

    int add_slow(int a, int b) const;
    int raw_mul(int a, int b) const;  // polynomial mulmod; used to bootstrap tables

    int p_;
    int m_;
    long q_;
    std::vector<int> modulus_;
    std::vector<int> neg_;
    std::vector<int> inv_;
    std::vector<int> exp_;   // exp_[t] = generator^t, t in [0, q-1)
    std::vector<int> log_;   // inverse of exp_ (log_[0] unused)
    std::vector<uint16_t> add_tab_, mul_tab_;
    const uint16_t* add_table_ = nullptr;
    const uint16_t* mul_table_ = nullptr;
    int generator_ = 1;
    std::vector<long> q1_divisors_;
    std::vector<std::pair<long, int>> q1_factor_;
};

// Interned field lookup. The default modulus is the lexicographically smallest
// monic irreducible of degree m over GF(p), comparing coefficients
// low-degree-first. Throws NotPrime / ReducibleModulus / FieldTooLarge.
const Field& field_of(int p, int m, const std::vector<int>* modulus = nullptr,
                      long max_q = Field::kDefaultMaxQ);
inline const Field& field_of(int p, int m, const std::vector<int>& modulus,
                             long max_q = Field::kDefaultMaxQ) {
    return field_of(p, m, &modulus, max_q);
}

class FieldElement {
  public:
    FieldElement() : f_(nullptr), r_(0) {}
    FieldElement(const Field& f, int repr) : f_(&f), r_(repr) {
        if (repr < 0 || repr >= f.q()) fail(errc::invalid_params, "element repr out of range");
    }

    const Field& field() const { return *f_; }
    int repr() const { return r_; }
    bool is_zero() const { return r_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(*a.f_, a.f_->add(a.r_, b.r_));
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(*a.f_, a.f_->sub(a.r_, b.r_));
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(*a.f_, a.f_->mul(a.r_, b.r_));
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(*a.f_, a.f_->mul(a.r_, b.f_->inv(b.r_)));
    }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(r_)); }
    FieldElement inverse() const { return FieldElement(*f_, f_->inv(r_)); }
    FieldElement pow(long long e) const { return FieldElement(*f_, f_->pow(r_, e)); }

    friend bool operator==(FieldElement a, FieldElement b) {
        check_same(a, b);
        return a.r_ == b.r_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

    long order() const { return f_->element_order(r_); }
    bool primitive() const { return f_->is_primitive(r_); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) fail(errc::field_mismatch, "operands from different fields");
    }
    const Field* f_;
    int r_;
};

inline FieldElement Field::elem(int repr) const { return FieldElement(*this, repr); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

// integer utilities shared across modules
bool is_prime(long n);
long gcd_long(long a, long b);
long power_long(long base, int exp);                       // overflow-checked
long power_capped(long base, long exp, long cap);          // min(base^exp, cap+1)
std::vector<std::pair<long, int>> factorize(long n);       // trial division, ascending primes
std::vector<long> sorted_divisors(long n);

}  // namespace lrc

#endif
