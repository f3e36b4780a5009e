#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracering/groebner.hpp"

namespace tracering {

// Raised when the proposed base function is constant on the curve; the
// detection layer converts this into a verdict.
struct ConstantBaseError : std::runtime_error {
    explicit ConstantBaseError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

enum class BaseRingKind {
    FieldUnivariate,    // C[I_alpha]
    RationalUnivariate, // Q[I_alpha]
    IntegerUnivariate,  // Z[I_alpha]
    PeripheralSubring,  // generated by the supplied peripheral traces
};

struct DependenceResult {
    bool integral = false;
    // when integral: monic dependence for f; univariate kinds use a ring
    // (base_name, f_name), the peripheral kind a ring (tags..., f)
    Poly dependence;
    uint32_t degree = 0;
    // when not integral over a univariate base: the offending leading
    // coefficient of the primitive image-curve polynomial
    Poly witness;
    std::string detail;
    // peripheral kind: tag variable name -> supplied trace polynomial
    std::vector<std::pair<std::string, Poly>> tag_images;
};

// The primitive integer-coefficient defining polynomial of the Zariski
// closure of the image of the curve under (base, f), sign-normalized.
// Output ring: (base_name lowest, f_name highest), pure lex.
Poly image_curve(const IdealPresentation& ideal, const Poly& f, const Poly& base,
                 std::string f_name = "", std::string base_name = "");

// Integral dependence of f over the base ring. Univariate kinds take the
// base polynomial; the peripheral kind takes named tag polynomials.
DependenceResult is_integral(const IdealPresentation& ideal, const Poly& f, BaseRingKind kind,
                             const Poly& base);
DependenceResult is_integral_peripheral(
    const IdealPresentation& ideal, const Poly& f,
    const std::vector<std::pair<std::string, Poly>>& peripheral);

// Contraction to rational coefficients: adjoin the minimal polynomial of
// the ring's generator and eliminate it. Rings without an adjoined
// generator come back as their reduced basis.
IdealPresentation rational_contraction(const IdealPresentation& ideal);

// Per-coordinate peripheral-subring verdicts; all-integral certifies that
// no closed essential surface is detected.
struct PeripheralProfile {
    std::vector<std::pair<std::string, DependenceResult>> per_coordinate;
    bool all_integral = true;
    std::optional<std::string> first_witness;  // coordinate name
};
PeripheralProfile peripheral_integrality_profile(
    const IdealPresentation& ideal, const std::vector<std::pair<std::string, Poly>>& coordinates,
    const std::vector<std::pair<std::string, Poly>>& peripheral);

// true if p is a single variable of its ring
std::optional<uint32_t> as_variable(const Poly& p);

}  // namespace tracering
