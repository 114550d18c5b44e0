#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motdec/errors.hpp"

namespace motdec {

/// A dominant weight of GL_d: weakly decreasing integer entries.
/// Entries may be negative; the polynomial cone has all entries >= 0.
struct WeightTuple {
    std::vector<int> entries;

    WeightTuple() = default;
    explicit WeightTuple(std::vector<int> e);

    int size() const { return static_cast<int>(entries.size()); }
    long abs_size() const; ///< |lambda| = sum of entries (requires entries >= 0)
    long entry_sum() const;
    bool is_dominant() const;

    auto operator<=>(const WeightTuple&) const = default;
};

/// Dominant weight with entries in (g/nd + Z), stored as doubled integers so
/// that half-integral values stay exact.
struct HalfWeightTuple {
    std::vector<int> doubled;

    static HalfWeightTuple from_doubled(std::vector<int> doubled2);

    auto operator<=>(const HalfWeightTuple&) const = default;
};

enum class BrauerTag { split, quaternion_indefinite, unspecified };
enum class InvolutionTag { totally_real, cm, other };

std::string to_string(BrauerTag t);
std::string to_string(InvolutionTag t);

/// One simple factor of the endomorphism algebra: center of degree n over the
/// rationals, index d, and the Galois action on the n embeddings given as
/// explicit permutations of {0,...,n-1}.
struct SimpleFactorDescriptor {
    int n = 1;
    int d = 1;
    std::vector<std::vector<int>> galois_generators;
    BrauerTag brauer = BrauerTag::split;
    InvolutionTag involution = InvolutionTag::other;

    /// Relative dimension attached to this factor (equals the total g for a
    /// single-factor descriptor).
    long g_factor = 0;

    /// Quaternion structure constants i^2 = a, j^2 = b for the realization
    /// presets. Only meaningful when d = 2.
    std::optional<std::pair<long, long>> quaternion_params;

    /// Complex conjugation on the embeddings, used by the CM duality flag.
    std::optional<std::vector<int>> conjugation;

    /// Optional user-supplied values of d(lambda) for brauer = unspecified.
    std::map<std::vector<int>, int> d_lambda_override;

    /// 2 g_factor / (n d); throws DescriptorError when not an integer.
    int two_g_over_nd() const;

    void validate() const;
};

/// Abelian scheme descriptor: total relative dimension and simple factors.
struct AbelianDescriptor {
    long g = 0;
    std::vector<SimpleFactorDescriptor> factors;

    void validate() const;
    bool single_factor() const { return factors.size() == 1; }
};

/// Fully materialized permutation group on {0,...,n-1}. The degree is capped
/// at 8, so the order is at most 8!.
class PermutationGroup {
public:
    static constexpr int kMaxDegree = 8;

    static PermutationGroup from_generators(int degree,
                                            const std::vector<std::vector<int>>& gens);

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<std::vector<int>>& elements() const { return elements_; }
    bool is_transitive() const;

private:
    int degree_ = 0;
    std::vector<std::vector<int>> elements_;
};

/// A weight for the restriction-of-scalars group: one WeightTuple per
/// embedding sigma in Sigma(K).
struct MultiWeight {
    std::vector<WeightTuple> per_sigma;

    MultiWeight() = default;
    explicit MultiWeight(std::vector<WeightTuple> ps) : per_sigma(std::move(ps)) {}

    int n() const { return static_cast<int>(per_sigma.size()); }

    auto operator<=>(const MultiWeight&) const = default;
};

/// Galois orbit of a MultiWeight, stored by its lexicographically minimal
/// element.
struct OrbitClass {
    MultiWeight representative;
    long orbit_size = 1;
    long stabilizer_order = 1;

    auto operator<=>(const OrbitClass&) const = default;
};

enum class AdmClass { not_pol, pol_not_adm, adm };

/// wt(blambda) = sum over sigma of |blambda(sigma)|. Defined only on the
/// polynomial cone; throws DescriptorError on a negative entry.
long weight_of(const MultiWeight& blambda);

/// The duality involution lambda -> (2g/nd - lambda_d, ..., 2g/nd - lambda_1),
/// applied per sigma. When `cm_convention` is set and the factor carries a
/// conjugation permutation, the result is additionally conjugated.
MultiWeight dual_wdual(const MultiWeight& blambda, const SimpleFactorDescriptor& factor,
                       long g, bool cm_convention = false);

AdmClass classify(const MultiWeight& blambda, const SimpleFactorDescriptor& factor, long g);

/// Membership test for the Lefschetz cone g/nd >= mu_1 >= ... >= mu_d >= -g/nd
/// with entries in g/nd + Z.
bool lefschetz_admissible(const HalfWeightTuple& mu, const SimpleFactorDescriptor& factor,
                          long g);

PermutationGroup galois_group(const SimpleFactorDescriptor& factor);

OrbitClass orbit_of(const MultiWeight& blambda, const PermutationGroup& group);

/// All Galois orbits of admissible multi-weights of one factor, sorted by
/// (weight, lexicographic representative).
std::vector<OrbitClass> enumerate_adm_orbits_factor(const SimpleFactorDescriptor& factor);

/// Coefficient vector of sum_{lambda in Lambda^adm} x^{|lambda|} for a single
/// embedding; index i holds the number of admissible tuples of size i.
std::vector<long long> adm_generating_function(const SimpleFactorDescriptor& factor, long g);

/// Gaussian binomial [d + N choose d]_x as a coefficient vector, computed by
/// the q-Pascal recurrence. Test oracle for adm_generating_function.
std::vector<long long> gaussian_binomial_box(int d, int N);

/// All admissible tuples of one factor (no orbiting), in lexicographic order.
std::vector<MultiWeight> enumerate_adm_elements(const SimpleFactorDescriptor& factor);

/// Gamma-orbit of the degree function sigma -> |lambda(sigma)|, the index of
/// the coarse decomposition. Returned as the lex-minimal representative plus
/// orbit size.
std::pair<std::vector<long>, long> coarse_value(const OrbitClass& xi,
                                                const SimpleFactorDescriptor& factor);

std::string format_weight_tuple(const WeightTuple& t);
std::string format_multiweight(const MultiWeight& mw); ///< "(2,1)" for n=1, "[0,1]" style for n>1, "3" for n=d=1

} // namespace motdec
