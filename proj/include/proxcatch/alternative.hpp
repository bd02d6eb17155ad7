#pragma once

#include <cmath>

#include "proxcatch/errors.hpp"

namespace proxcatch {

// Largest admissible corner scale: epsilon must stay in (0, sqrt(3)/3).
inline double max_epsilon() { return std::sqrt(3.0) / 3.0; }

/* Sampling model for the X points on the standard triangle.

   Null is the uniform (complete spatial randomness) model. Segregation(eps)
   is uniform outside the three corner triangles of vertex-line height eps;
   Association(eps) is uniform inside the corner triangles of height
   sqrt(3)/3 - eps, so eps -> 0 recovers the null in both families. */
class AlternativeSpec {
public:
    enum class Kind { Null, Segregation, Association };

    static AlternativeSpec null() { return AlternativeSpec(Kind::Null, 0.0); }
    static AlternativeSpec segregation(double eps) { return AlternativeSpec(Kind::Segregation, checked(eps)); }
    static AlternativeSpec association(double eps) { return AlternativeSpec(Kind::Association, checked(eps)); }

    Kind kind() const { return kind_; }
    bool is_null() const { return kind_ == Kind::Null; }
    double epsilon() const { return eps_; }

private:
    AlternativeSpec(Kind k, double eps) : kind_(k), eps_(eps) {}
    static double checked(double eps) {
        if (!(eps > 0.0) || !(eps < max_epsilon()))
            throw DomainError("alternative: epsilon must be in (0, sqrt(3)/3)");
        return eps;
    }

    Kind kind_;
    double eps_;
};

/* Segregation parametrized by the per-corner carved area fraction delta in
   (0, 4/9); the equivalent corner height is sqrt(3*delta/4). */
inline double delta_to_eps_segregation(double delta) {
    if (!(delta > 0.0) || !(delta < 4.0 / 9.0))
        throw DomainError("delta_to_eps_segregation: delta must be in (0, 4/9)");
    return std::sqrt(3.0 * delta / 4.0);
}

}  // namespace proxcatch
