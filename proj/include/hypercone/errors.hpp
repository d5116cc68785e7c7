#pragma once

#include <stdexcept>

namespace hypercone {

// Sturm counting was asked to use an endpoint that is a root of the
// polynomial; the caller must perturb or deflate first.
struct EndpointIsRoot : std::domain_error {
    using std::domain_error::domain_error;
};

// refine_root precondition violated: the bracket endpoints do not have
// opposite signs.
struct NoSignChange : std::domain_error {
    using std::domain_error::domain_error;
};

// The critical polynomial did not have exactly one positive root; signals a
// transcription or logic fault and must never fire.
struct RootCountNotOne : std::logic_error {
    using std::logic_error::logic_error;
};

// The canonical Sturm chain degenerated below the expected length.
struct ChainTooShort : std::logic_error {
    using std::logic_error::logic_error;
};

// Evaluation requested too close to the cone angle where the upper solution
// has its pole.
struct AtPole : std::domain_error {
    using std::domain_error::domain_error;
};

// Lower-solution factor outside the admissible window (0, 1 - 1/(m+alpha)).
struct NotBelowOne : std::domain_error {
    using std::domain_error::domain_error;
};

// Integrated trajectory left the funnel between the lower and upper
// solutions.
struct BarrierEscape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive step size collapsed below the machine floor.
struct StepUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Auxiliary-function query within the excluded band around the cone angle.
struct AngleNearCone : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hypercone
