#pragma once

#include "hypsys/matrix.hpp"
#include "hypsys/polynomial.hpp"

namespace hypsys {

/// K_n = floor(n/2) - 1.
int K_of(int n);
/// L_n = n - 2 - K_n.
int L_of(int n);

/// π_n.t^k
LabeledPermutation central_loop_vertex(int n, int k);

/// γ_{n,k} = b^{n-1-k} t^{n-1-2k} from π_n.t^k, 1 <= k <= K_n.
RauzyPath gamma_nk(int n, int k);
/// γ_{n,k,l}: γ_{n,k} with one extra loop, 1 <= l <= 2n-2-3k.
RauzyPath gamma_nkl(int n, int k, int l);
std::vector<Move> gamma_nk_word(int n, int k);
std::vector<Move> gamma_nkl_word(int n, int k, int l);

/// X^{n+1} - 2X^{n-1} - 2 Σ_{j∈J} X^j - 2X^2 + 1. Throws MustReduceError
/// when gcd(n-1, k) > 1.
IntPolynomial family_P_nk(int n, int k);
/// Even n, 1 <= l <= L_n.
IntPolynomial family_P_nKl_even(int n, int l);
/// n ≡ 3 mod 4, odd l <= L_n. Throws ReducibleError for even l.
IntPolynomial family_P_nKl_odd(int n, int l);

/// Closed form of the least dilatation polynomial, n >= 4.
IntPolynomial systole_polynomial(int n);
/// Second least value, n even, n >= 18, n ≢ 4 mod 6. OutOfRange otherwise.
IntPolynomial second_polynomial(int n);

/// The displayed form of V_{n,k} in the α-labeling, gcd(n-1, k) = 1.
IntMatrix closed_form_vnk(int n, int k);
/// A_n - B_{n,k} (same labeling).
IntMatrix closed_form_vnk_split(int n, int k);
/// Even n: V_{n,K_n} + C_{n,l} for 1 <= l <= L_n, V_{n,K_n} + B_n for l = L_n+2.
IntMatrix closed_form_vnKl_even(int n, int l);
/// n ≡ 3 mod 4: A_n + B_{n,l} for odd l <= L_n, the block form for l = L_n+2.
IntMatrix closed_form_vnKl_odd(int n, int l);

}  // namespace hypsys
