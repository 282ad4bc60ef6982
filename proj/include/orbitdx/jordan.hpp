#pragma once

#include <vector>

#include "orbitdx/mat.hpp"
#include "orbitdx/scalar.hpp"

namespace orbitdx {

struct EigenChains {
    GaussianRational value;
    std::vector<int> chains; // lengths, kept sorted non-increasing
};

/**
 * Jordan structure: the eigenvalues together with the multiset of chain
 * lengths per eigenvalue. This is the full similarity invariant. Eigenvalue
 * order is preserved (it picks the default flight order); equality ignores
 * it.
 */
class JordanStructure {
public:
    JordanStructure() = default;
    explicit JordanStructure(std::vector<EigenChains> eigs);

    const std::vector<EigenChains>& eigenvalues() const { return eigs_; }
    bool empty() const { return eigs_.empty(); }
    int total_size() const;

    bool has_eigenvalue(const GaussianRational& v) const;
    const std::vector<int>& chains_of(const GaussianRational& v) const;
    std::vector<GaussianRational> eigenvalue_list() const;

    /// Structural equality up to eigenvalue order.
    friend bool operator==(const JordanStructure& a, const JordanStructure& b);
    friend bool operator!=(const JordanStructure& a, const JordanStructure& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<EigenChains> eigs_;
};

struct TypeStep {
    GaussianRational lambda;
    int n = 0;
};

/**
 * The ordered couples (lambda_k, n_k), k = 1..M: block sizes of the
 * hierarchy. Each eigenvalue occurs as many times as its longest chain;
 * its k-th occurrence counts the chains of length >= k, so the n over one
 * eigenvalue's occurrences are non-increasing. Occurrences are usually
 * consecutive; interleaved sequences pass validation but are experimental.
 */
class TypeSequence {
public:
    TypeSequence() = default;
    explicit TypeSequence(std::vector<TypeStep> steps);

    const std::vector<TypeStep>& steps() const { return steps_; }
    int count() const { return static_cast<int>(steps_.size()); } // M
    int total_size() const;                                      // N

    /// Offset of step k (1-based) in the N-dimensional ambient space:
    /// n_1 + ... + n_{k-1}.
    int offset(int k) const;

    /// Steps k..M as a sequence of their own (used by trailing blocks).
    TypeSequence tail(int k) const;

    friend bool operator==(const TypeSequence& a, const TypeSequence& b);
    friend bool operator!=(const TypeSequence& a, const TypeSequence& b) { return !(a == b); }

private:
    std::vector<TypeStep> steps_;
};

/// Removes one unit from every chain of `lambda`, dropping chains that hit
/// zero; other eigenvalues are untouched. Throws EigenvalueError if lambda
/// is not an eigenvalue.
JordanStructure project(const JordanStructure& j, const GaussianRational& lambda);

/// Type sequence with eigenvalue groups in the structure's own order.
TypeSequence type_sequence(const JordanStructure& j);

/// Same with an explicit eigenvalue order (must be a permutation of the
/// eigenvalue set).
TypeSequence type_sequence(const JordanStructure& j, const std::vector<GaussianRational>& order);

/// Inverse of type_sequence: chain multiplicities are the consecutive
/// differences of each eigenvalue's n values.
JordanStructure structure_from_sequence(const TypeSequence& t);

/// dim O(J) = N^2 - sum_lambda sum_{i,j} min(l_i, l_j).
long orbit_dim(const JordanStructure& j);

/// Normal form whose basis is ordered flight-compatibly: for every k the
/// kernel of the step-k residue is spanned by its leading n_k coordinates,
/// so extraction over the identity chart runs with all coordinates zero.
Mat jordan_matrix(const TypeSequence& t);

} // namespace orbitdx
