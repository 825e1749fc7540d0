#ifndef GRADSTAR_JORDAN_REAL_HPP
#define GRADSTAR_JORDAN_REAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gradstar/jordan_complex.hpp"
#include "gradstar/matrix.hpp"
#include "gradstar/mupoly.hpp"
#include "gradstar/poly.hpp"

namespace gradstar {

// Real Jordan specification for one complex-conjugate eigenvalue pair
// alpha +- i beta: block i has size 2 * half_sizes[i], half sizes weakly
// decreasing (half size n+1 corresponds to parameter n).
struct JordanSpecR {
    Rational alpha;
    Rational beta;
    std::vector<size_t> half_sizes;

    void validate() const;
    bool is_normalized() const { return alpha == 0 && beta == 1; }
    size_t dimension() const;
    /// x{b}_{j}, y{b}_{j} interleaved per block, block-major.
    std::vector<std::string> var_names() const;
    /// Total parameter: n_1 + ... + n_m + m - 1.
    size_t total_parameter() const;
    /// Number of blocks with half size >= k+1.
    size_t nu(size_t k) const;
};

/// The real Jordan matrix of the spec (2x2 rotation-like blocks on the
/// diagonal, identity blocks above).
Matrix real_jordan_matrix(const JordanSpecR& spec);

struct NormalizedSolution {
    JordanSpecR spec;  // alpha = 0, beta = 1
    Poly f, g;
};

/// Change of dependent and independent variables taking a solution of the
/// (alpha, beta) system to one of the normalized system: f - alpha g, beta g,
/// and scaling x^k_j by beta^(j - n_k).  Both sides are verified.
NormalizedSolution normalize_real(const JordanSpecR& spec, const Poly& f, const Poly& g);

/// Extended system (X = M^-1, Z = (1+mu^2)^(n+1)) in the x coordinates.
StarSystem real_extended_system(const JordanSpecR& spec);

/// Extension of a solution of grad f = M grad g, M with eigenvalues +-i, to
/// the full mu-vector: V_0 = f, V_{2n+1} = g, middle slots integrated with
/// value 0 at the origin via the downward recursion
/// grad V_{j-1} = Z_j grad g - M^-1 grad V_j.
MuPoly extend_solution(const Matrix& m, const std::vector<std::string>& vars, const Poly& f,
                       const Poly& g);

/// extend_solution for a normalized real Jordan spec.
MuPoly extend_real(const JordanSpecR& spec, const Poly& f, const Poly& g);

// Basis matrix making the plain linear form s_0 + s_1 mu + ... a solution in
// the s coordinates (single block, half size n+1).
struct RealBasis {
    Matrix b;
    size_t n = 0;
};

/// Assembles B from the 2x1 block formula
/// B_{ij} = C(i+j-3, i-1) (-L)^(i+j-2) e_1 and verifies -M^-T B = B C.
RealBasis basis_matrix(size_t n);

/// Closed form for the 2x2 blocks of (-M^-T)^a (block lower triangular,
/// C(a-1+i-j, i-j) (-L)^(a+i-j)); the oracle for the basis construction.
Matrix neg_inv_transpose_power_formula(size_t n, long a);

/// s-coordinate system of the single block: X = -C^T, Z = (1+mu^2)^(n+1),
/// variables s1_0..s1_{2n+1}.
StarSystem s_system(size_t n);

/// Multi-block s-coordinate system: X = diag(-C_b^T), Z = (1+mu^2)^(N+1).
StarSystem s_system_multi(const JordanSpecR& spec);

std::vector<std::string> s_var_names(const JordanSpecR& spec);

/// The linear solution s_mu of block b (1-based) over the given variables.
MuPoly s_linear_form(const JordanSpecR& spec, size_t block,
                     const std::vector<std::string>& ambient);

struct RealComponent {
    Poly complex_form;  // F_k, complex coefficients over the x,y variables
    Poly f, g;          // real and imaginary coefficient parts
};

/// Evaluates the k-th component of the general solution of the normalized
/// real system: the mu-derivatives of phi_k at 0 combined with the
/// conjugate correction weights (-i/2)^l k!/(k-l)!.  phi_k is a complex
/// polynomial in s1..s_{nu_k}.
RealComponent real_component(const Poly& phi_k, size_t k, const JordanSpecR& spec);

/// Sum of the components for phi_0..phi_{n_1}; the pair (Re F, Im F).
SolutionPair real_general_solution(const std::vector<Poly>& phis, const JordanSpecR& spec);

/// The constant solutions a_{0,mu}..a_{n,mu} of the single-block
/// reconstruction, as length 2n+2 constant mu-vectors over the s variables.
std::vector<MuPoly> reconstruction_constants(size_t n);

/// The square root of -1 in the quotient ring mod (1+mu^2)^(n+1) that
/// reduces to mu at n = 0; complex scalar coefficients act through it.
MuPoly imaginary_unit_vector(size_t n);

/// Star-series reconstruction in s coordinates for a single block:
/// sum_{k,j} c_{kj} a_{k,mu} * (s_mu)^j. Coefficients may be complex; a
/// complex c acts as star multiplication by Re(c) + Im(c) J.
MuPoly reconstruct_real(const std::map<std::pair<size_t, size_t>, Scalar>& coeffs, size_t n,
                        size_t truncation);

struct HypothesisReport {
    bool agree = false;
    size_t unknowns = 0;
    size_t equations = 0;
    std::string detail;  // certificate location when disagreeing
};

/// Experimental harness for the multi-block real series form: solves a
/// linear system for the constant mu-vectors that would reproduce the
/// direct solution generated by the given phi's, and reports the outcome.
/// It decides nothing beyond the chosen truncation.
HypothesisReport hypothesis_check(const JordanSpecR& spec, const std::vector<Poly>& phis,
                                  size_t truncation);

/// The nested circle-power embedding of block star powers used by the
/// harness, a mu-vector of the full multi-block s system.
MuPoly nested_real_star_power(const JordanSpecR& spec, const std::vector<long>& index);

}  // namespace gradstar

#endif
