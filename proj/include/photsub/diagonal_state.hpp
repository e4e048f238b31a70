#ifndef PHOTSUB_DIAGONAL_STATE_HPP
#define PHOTSUB_DIAGONAL_STATE_HPP

#include <cstddef>
#include <vector>

namespace photsub {

struct ThermalParams {
    double n_th = 0.0; ///< mean thermal photon number, >= 0
};

/// Photon-number distribution of a state diagonal in the Fock basis,
/// truncated at n_max. probs()[n] is the weight of |n><n|; tail_mass() is the
/// probability mass not represented in probs() (beyond the cutoff, or smeared
/// out of it by a channel). Entries are non-negative and
/// sum(probs) + tail_mass = 1 within 1e-12. Immutable after construction.
class DiagonalState {
public:
    /// Validating constructor path; throws DomainError on invariant violation.
    static DiagonalState from_probs(std::vector<double> probs, double tail_mass = 0.0);

    /// Rescales non-negative weights to a unit-sum distribution (tail 0).
    /// Throws DomainError on negative entries or non-finite/zero total weight.
    static DiagonalState normalized(std::vector<double> weights);

    const std::vector<double>& probs() const { return probs_; }
    double tail_mass() const { return tail_mass_; }
    std::size_t size() const { return probs_.size(); } ///< n_max + 1
    int n_max() const { return static_cast<int>(probs_.size()) - 1; }

    /// Weight of |n><n|; zero beyond the truncation cutoff.
    double operator[](std::size_t n) const { return n < probs_.size() ? probs_[n] : 0.0; }

private:
    DiagonalState(std::vector<double> p, double tail) : probs_(std::move(p)), tail_mass_(tail) {}

    std::vector<double> probs_;
    double tail_mass_;
};

/// nu_n(N) = (1/(1+N)) (N/(1+N))^n for n <= n_max; tail = (N/(1+N))^(n_max+1).
DiagonalState thermal_state(ThermalParams params, int n_max);

/// Smallest cutoff for which the thermal tail (N/(1+N))^(n_max+1) < tail_eps,
/// never below 16.
int thermal_cutoff(double n_th, double tail_eps = 1e-12);

/// First and second moments over the represented entries only; the caller can
/// bound the truncation bias with tail_mass().
double mean(const DiagonalState& state);
double variance(const DiagonalState& state);

/// Variance-to-mean ratio. Throws StatisticError when mean is zero.
double fano(const DiagonalState& state);

/// -sum p ln p in nats, with the 0 ln 0 = 0 convention.
double shannon_entropy(const DiagonalState& state);

/// Entropy of a thermal state with mean n: n ln(1 + 1/n) + ln(1 + n); zero at n = 0.
double thermal_entropy(double n);

/// Bhattacharyya overlap sum_n sqrt(p_n q_n); the shorter support is zero-padded.
double fidelity(const DiagonalState& p, const DiagonalState& q);

} // namespace photsub

#endif
