#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "takiff/lie_algebra.hpp"
#include "takiff/takiff_algebra.hpp"

namespace takiff {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  long height = 10;
  std::size_t symbolic_cells_cap = 1024;
  std::size_t symbolic_vars_cap = 12;

  GenericRankOptions rank_options(std::uint64_t salt = 0) const {
    GenericRankOptions o;
    o.symbolic_cells_cap = symbolic_cells_cap;
    o.symbolic_vars_cap = symbolic_vars_cap;
    o.samples = samples;
    o.height = height;
    o.seed = derive_seed_salted(salt);
    return o;
  }
  std::uint64_t derive_seed_salted(std::uint64_t salt) const;
};

enum class Certification {
  CertifiedSymbolic,  // generic rank by symbolic elimination
  CertifiedByBound,   // sampled value meets a proven lower bound, hence exact
  UpperBoundOnly,     // sampled value; the true modality can only be smaller
};

std::string to_string(Certification c);

struct ModalityQuery {
  Jet x;
  QuadraticForm form;  // on x.base
  std::size_t m = 0;
  std::size_t n = 0;
  /// chi of the base when known exactly (catalog entries); otherwise the
  /// engine computes it and only certifies against it when symbolic.
  std::optional<std::size_t> known_index;
};

struct ModalityResult {
  std::size_t value = 0;
  Certification status = Certification::UpperBoundOnly;
  std::size_t lower_bound = 0;  // (n-m) * chi
  std::size_t base_index = 0;   // chi used for the bound
  bool index_exact = true;
  std::size_t fixed_centralizer_dim = 0;  // dim g_m^{x(m)}
  std::optional<Jet> witness;             // extension attaining the value
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
};

/// min over y with y(m) = x(m) of dim g_n^{y(n)} - dim g_m^{x(m)}, computed
/// as (n+1)d - generic rank of the ad matrix with symbolic tail coefficients.
ModalityResult modality(const ModalityQuery& q, const RunOptions& opts = {});

/// u_k = dim g_k^{x(k)} for k = 0..cap.
std::vector<std::size_t> centralizer_dim_sequence(const Jet& x, std::size_t cap);

struct ConcavityReport {
  bool pass = false;
  std::vector<std::size_t> sequence;
  std::optional<std::size_t> first_violation;  // smallest m with u_{m+2}+u_m > 2u_{m+1}
};

ConcavityReport check_sequence_concavity(const std::vector<std::size_t>& u);
/// Concavity of (dim g_k^{x(k)})_k up to `cap`, slope inequalities included.
ConcavityReport concavity_check(const Jet& x, std::size_t cap);

struct ElementClass {
  enum Kind { Regular, Subregular, Other } kind = Other;
  std::size_t excess = 0;  // dim g^{x0} - chi
};

ElementClass classify(const Element& x0, std::size_t chi);
std::string to_string(const ElementClass& c);

// --- verifiers -------------------------------------------------------------

struct Report {
  bool pass = false;
  std::string name;
  std::vector<std::string> lines;  // one per checked fact, with the numbers
  void check(bool ok, std::string line);
};

/// chi(g_m) = (m+1) chi(g), plus sampled elements confirming that
/// y(m) is regular in g_m iff y_0 is regular in g.
Report verify_rais_tauvel(const AlgebraPtr& g, std::optional<std::size_t> known_index,
                          std::size_t m, std::size_t trials, const RunOptions& opts);

/// value >= (n-m) chi for the query's modality result.
Report verify_lower_bound(const ModalityQuery& q, const RunOptions& opts);

/// Given mod_{m,n}(x) = (n-m) chi certified: mod_{m,n'}(x) = (n'-m) chi, and
/// the witness extension attains the bound at every intermediate pair.
Report verify_heredity(const ModalityQuery& q, std::size_t n_prime, const RunOptions& opts);

/// Subregular x_0: modality is (n-m)(chi+2) when the centralizer of x_0 is
/// abelian and (n-m) chi when it is not.
Report verify_subregular(const ModalityQuery& q,
                         const std::vector<std::pair<std::size_t, std::size_t>>& levels,
                         const RunOptions& opts);

/// mod_{0,1}(x) = chi(g^{x0}) = chi(g).
Report verify_elashvili(const QuadraticForm& form, std::optional<std::size_t> known_index,
                        const Element& x0, const RunOptions& opts);

/// mod_{m,n}(x) = mod_{m+k,n+k}(shift x), both certified.
Report verify_shift(const ModalityQuery& q, std::size_t k, const RunOptions& opts);

/// Modality of x in g equals the modality of the sliced jet (with x_nil in
/// degree 0) inside the centralizer of x_ss; for semisimple x_0 also checks
/// mod_{1,n}(x) = (n-1) chi.
Report verify_jordan_reduction(const ModalityQuery& q, const RunOptions& opts);

/// lhs = rhs for the level-m centralizer recursion on random jets.
Report verify_recursion(const QuadraticForm& form, std::size_t m, std::size_t trials,
                        long height, std::uint64_t seed);

/// lhs = rhs and lhs <= 2 dim g^{x0} for the level-1 formula on random pairs.
Report verify_m1(const QuadraticForm& form, std::size_t trials, long height,
                 std::uint64_t seed);

/// K(x(m), .) equals the degreewise dual vector on random jets.
Report verify_duality(const QuadraticForm& form, std::size_t m, std::size_t trials,
                      long height, std::uint64_t seed);

/// Concavity of the centralizer dimension sequence on random jets.
Report verify_concavity(const AlgebraPtr& g, std::size_t cap, std::size_t trials,
                        long height, std::uint64_t seed);

/// Random jet with coefficients of degree < support and integer coordinates.
Jet random_jet(const AlgebraPtr& g, std::size_t support, long height, std::uint64_t seed);

}  // namespace takiff
