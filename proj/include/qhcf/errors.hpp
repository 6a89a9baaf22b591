#pragma once

#include <stdexcept>
#include <string>

namespace qhcf {

// Thrown when a rational argument is outside the domain (value < 1, zero
// denominator, ...).
struct InvalidRational : std::domain_error {
    using std::domain_error::domain_error;
};

// Series expansion at q=0 needs a denominator with nonzero constant term.
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// Long division produced a non-integer coefficient.
struct NonIntegerSeries : std::domain_error {
    using std::domain_error::domain_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// positivity_difference called with r/s <= a/b.
struct OrderViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// A difference that should be coefficientwise nonnegative is not.  Indicates
// an implementation bug, never a bad input.
struct PositivityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// The prefix-swap injection found no swappable position.  Same as above:
// signals a bug, not bad input.
struct NoSwappablePosition : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qhcf
