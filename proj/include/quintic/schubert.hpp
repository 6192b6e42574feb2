#ifndef QUINTIC_SCHUBERT_HPP
#define QUINTIC_SCHUBERT_HPP

/**
 * @file schubert.hpp
 * @brief Schubert calculus on the Grassmannian of lines G(2,n), enough to
 *        count lines on hypersurfaces classically: integrate the top Chern
 *        class of Sym^k S* against the fundamental class.
 *
 * Elements live in the basis of Schubert classes s(a,b), n-2 >= a >= b >= 0,
 * with 64-bit integer coefficients (ample for these ranks).  Multiplication
 * is hard-coded Pieri: by the special classes s(k) and s(1,1), extended to
 * arbitrary products through s(a,b) = s(1,1)^b * s(a-b).
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quintic {

class SchubertRing {
public:
    using Elt = std::vector<std::int64_t>;  // dense over the class basis

    /// Cohomology ring of G(2,n) for n >= 3.
    explicit SchubertRing(int n);

    int n() const { return n_; }
    int max_part() const { return n_ - 2; }
    int dimension() const { return 2 * (n_ - 2); }
    int basis_size() const { return static_cast<int>(basis_.size()); }

    int index_of(int a, int b) const;  // StructureError for invalid (a,b)
    std::pair<int, int> partition_at(int idx) const { return basis_.at(static_cast<size_t>(idx)); }

    Elt zero() const { return Elt(basis_.size(), 0); }
    Elt one() const { return sigma(0, 0); }
    Elt sigma(int a, int b) const;

    /// Pieri rule for the special class s(k): s(k) * s(c,d) summed over
    /// s(e,f) with e+f = c+d+k, e >= c >= f >= d, e <= n-2.
    Elt multiply_special(int k, const Elt& x) const;
    /// s(1,1) * s(c,d) = s(c+1,d+1), clipped at the top row length.
    Elt multiply_sigma11(const Elt& x) const;
    Elt multiply(const Elt& x, const Elt& y) const;

    /// Coefficient of the point class s(n-2,n-2).
    std::int64_t integrate(const Elt& x) const;

    std::string to_string(const Elt& x) const;

private:
    int n_;
    std::vector<std::pair<int, int>> basis_;        // (a,b) in graded order
    std::vector<std::vector<int>> index_;           // index_[a][b] or -1
};

/// Integral over G(2,n) of the top Chern class of Sym^k S* (rank k+1, via
/// Chern roots k x1, (k-1)x1 + x2, ..., k x2); requires k+1 == dim G(2,n).
std::int64_t symmetric_power_top_chern(int n, int k);

/// Lines on a generic quintic threefold: c6(Sym^5 S*) over G(2,5) = 2875.
std::int64_t count_lines_on_quintic();

/// Lines on a generic cubic surface: c4(Sym^3 S*) over G(2,4) = 27.
std::int64_t count_lines_on_cubic_surface();

/// Degree of G(2,5) in the Pluecker embedding: integral of s(1)^6 = 5.
std::int64_t plucker_degree_g25();

}  // namespace quintic

#endif
