#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace alphamod {

/// Discrete probability measure on (0,1). All fixed-point integrals reduce
/// to finite sums over the atoms.
class WeightMeasure {
public:
    struct Atom {
        double q;     // support point in (0,1)
        double mass;  // > 0
    };

    WeightMeasure() = default;
    /// Atoms are sorted, merged when coincident, and masses normalized to 1.
    explicit WeightMeasure(std::vector<Atom> atoms);

    static WeightMeasure single_atom(double q);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    /// ∫ q^p dμ
    double moment(double p) const;

    double min_q() const { return atoms_.front().q; }
    double max_q() const { return atoms_.back().q; }

private:
    std::vector<Atom> atoms_;
};

/// Generative law for the intrinsic weights q_i. Either an explicit list of
/// atoms or a truncated power law (density ∝ q^-exponent on [q_lo, q_hi];
/// exponent 0 is the uniform law).
struct WeightLawSpec {
    enum class Kind { Discrete, PowerLaw };

    Kind kind = Kind::Discrete;
    std::vector<WeightMeasure::Atom> atoms;  // Discrete
    double exponent = 0.0;                   // PowerLaw
    double q_lo = 0.0;
    double q_hi = 0.0;

    static WeightLawSpec discrete(std::vector<WeightMeasure::Atom> atoms);
    static WeightLawSpec power_law(double exponent, double q_lo, double q_hi);

    void validate() const;

    /// Inverse-CDF sample from a uniform u in [0,1).
    double sample(double u) const;

    /// Measure used by the fixed-point machinery. Power laws are discretized
    /// into `bins` cells with exact per-cell mass and conditional-mean nodes.
    WeightMeasure to_measure(int bins = 200) const;

    std::string describe() const;
};

}  // namespace alphamod
