#include "alphamod/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "alphamod/errors.hpp"

namespace alphamod {

WeightMeasure::WeightMeasure(std::vector<Atom> atoms) {
    if (atoms.empty()) throw InvalidMeasure("measure has no atoms");
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.q < b.q; });
    double total = 0.0;
    for (const Atom& a : atoms) {
        if (!(a.q > 0.0 && a.q < 1.0)) throw InvalidMeasure("atom outside (0,1)");
        if (!(a.mass > 0.0)) throw InvalidMeasure("non-positive atom mass");
        total += a.mass;
    }
    atoms_.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!atoms_.empty() && a.q - atoms_.back().q < 1e-15) {
            atoms_.back().mass += a.mass / total;
        } else {
            atoms_.push_back({a.q, a.mass / total});
        }
    }
}

WeightMeasure WeightMeasure::single_atom(double q) { return WeightMeasure({{q, 1.0}}); }

double WeightMeasure::moment(double p) const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.mass * std::pow(a.q, p);
    return s;
}

WeightLawSpec WeightLawSpec::discrete(std::vector<WeightMeasure::Atom> atoms) {
    WeightLawSpec s;
    s.kind = Kind::Discrete;
    s.atoms = std::move(atoms);
    s.validate();
    return s;
}

WeightLawSpec WeightLawSpec::power_law(double exponent, double q_lo, double q_hi) {
    WeightLawSpec s;
    s.kind = Kind::PowerLaw;
    s.exponent = exponent;
    s.q_lo = q_lo;
    s.q_hi = q_hi;
    s.validate();
    return s;
}

void WeightLawSpec::validate() const {
    if (kind == Kind::Discrete) {
        WeightMeasure check(atoms);  // throws on bad atoms
    } else {
        if (!(q_lo > 0.0 && q_hi < 1.0 && q_lo < q_hi))
            throw InvalidMeasure("power-law support must satisfy 0 < q_lo < q_hi < 1");
    }
}

namespace {

// Antiderivative of q^-g.
double power_int(double x, double g) {
    if (std::abs(g - 1.0) < 1e-12) return std::log(x);
    return std::pow(x, 1.0 - g) / (1.0 - g);
}

}  // namespace

double WeightLawSpec::sample(double u) const {
    if (kind == Kind::Discrete) {
        WeightMeasure m(atoms);
        double acc = 0.0;
        for (const auto& a : m.atoms()) {
            acc += a.mass;
            if (u < acc) return a.q;
        }
        return m.atoms().back().q;
    }
    const double g = exponent;
    if (std::abs(g - 1.0) < 1e-12) {
        return q_lo * std::pow(q_hi / q_lo, u);
    }
    const double flo = std::pow(q_lo, 1.0 - g);
    const double fhi = std::pow(q_hi, 1.0 - g);
    return std::pow(flo + u * (fhi - flo), 1.0 / (1.0 - g));
}

WeightMeasure WeightLawSpec::to_measure(int bins) const {
    if (kind == Kind::Discrete) return WeightMeasure(atoms);
    std::vector<WeightMeasure::Atom> out;
    out.reserve(static_cast<std::size_t>(bins));
    const double g = exponent;
    for (int b = 0; b < bins; ++b) {
        const double lo = q_lo + (q_hi - q_lo) * b / bins;
        const double hi = q_lo + (q_hi - q_lo) * (b + 1) / bins;
        const double mass = power_int(hi, g) - power_int(lo, g);
        const double mean = (power_int(hi, g - 1.0) - power_int(lo, g - 1.0)) / mass;
        out.push_back({mean, mass});
    }
    return WeightMeasure(std::move(out));
}

std::string WeightLawSpec::describe() const {
    std::ostringstream os;
    if (kind == Kind::Discrete) {
        bool first = true;
        for (const auto& a : atoms) {
            if (!first) os << ",";
            os << a.mass << "@" << a.q;
            first = false;
        }
    } else {
        os << "powerlaw:" << exponent << ":" << q_lo << ":" << q_hi;
    }
    return os.str();
}

}  // namespace alphamod
