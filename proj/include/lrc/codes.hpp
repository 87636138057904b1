#ifndef LRC_CODES_HPP
#define LRC_CODES_HPP

#include <vector>

#include "lrc/polyring.hpp"

namespace lrc {

enum class CodeKind { single_root, pair_root };

// Constacyclic code descriptor. Two families over GF(p^m):
//   single_root: <(x^eta - lambda0)^i>   in F[x]/(x^{eta p^s} - lambda), gcd(eta,p)=1
//   pair_root:   <(x-delta)^i (x+delta)^j> in F[x]/(x^{2 p^s} - lambda), p odd,
//                delta^2 = lambda0 a quadratic residue, normalized i < j
// lambda = lambda0^{p^s} in both cases. Immutable after construction.
class CodeSpec {
  public:
    static CodeSpec single(const Field& f, int eta, int s, int lambda0, int i);
    // i > j inputs are normalized by swapping (relabeling +-delta keeps the
    // ideal); i == j inputs reduce to single(eta=2, lambda0, i)
    static CodeSpec pair(const Field& f, int s, int lambda0, int i, int j);

    const Field& field() const { return *f_; }
    CodeKind kind() const { return kind_; }
    int eta() const { return eta_; }
    int s() const { return s_; }
    long ppow() const { return ppow_; }  // p^s
    int i() const { return i_; }
    int j() const { return j_; }  // pair only
    int lambda0() const { return lambda0_; }
    int delta() const { return delta_; }  // pair only: the stored root of lambda0
    int lambda() const { return lambda_; }
    long n() const { return n_; }
    long k() const { return k_; }
    const Polynomial& g() const { return g_; }

    CodeSpec dual() const;

    friend bool operator==(const CodeSpec& a, const CodeSpec& b) {
        return a.f_ == b.f_ && a.kind_ == b.kind_ && a.eta_ == b.eta_ && a.s_ == b.s_ &&
               a.i_ == b.i_ && a.j_ == b.j_ && a.lambda0_ == b.lambda0_ && a.delta_ == b.delta_;
    }
    friend bool operator!=(const CodeSpec& a, const CodeSpec& b) { return !(a == b); }

  private:
    CodeSpec() = default;
    static CodeSpec pair_raw(const Field& f, int s, int delta, int i, int j);

    const Field* f_ = nullptr;
    CodeKind kind_ = CodeKind::single_root;
    int eta_ = 1;
    int s_ = 1;
    long ppow_ = 1;
    int i_ = 0;
    int j_ = -1;
    int lambda0_ = 1;
    int delta_ = -1;
    int lambda_ = 1;
    long n_ = 0;
    long k_ = 0;
    Polynomial g_;
};

struct Codeword {
    CodeSpec code;
    std::vector<int> coeffs;  // length n, element reprs
};

// true iff g divides the associated code polynomial (valid since g | x^n - lambda)
bool is_codeword(const CodeSpec& code, const std::vector<int>& word);

// (c0,...,c_{n-1}) -> (lambda c_{n-1}, c0, ..., c_{n-2})
std::vector<int> constacyclic_shift(const CodeSpec& code, const std::vector<int>& word);
Codeword constacyclic_shift(const Codeword& w);

// rows are the coefficient vectors of x^t g(x), t = 0..k-1
std::vector<std::vector<int>> generator_matrix(const CodeSpec& code);   // DegenerateCode if k=0
std::vector<std::vector<int>> parity_check_matrix(const CodeSpec& code);  // DegenerateCode if k=n

std::vector<int> poly_to_word(const Polynomial& p, long n);
Polynomial word_to_poly(const Field& f, const std::vector<int>& word);

}  // namespace lrc

#endif
