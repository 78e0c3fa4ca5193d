#pragma once

#include <stdexcept>
#include <string>

namespace posetdim {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A label was referenced that is not part of the ground set.
struct UnknownLabel : Error { using Error::Error; };

/// A ground set was constructed from an invalid label sequence.
struct InvalidLabel : Error { using Error::Error; };

/// A relation would contain no pairs at all.
struct EmptyRelation : Error { using Error::Error; };

/// Two relations over different ground sets were combined.
struct GroundSetMismatch : Error { using Error::Error; };

/// A relation failed the partial-order axioms where one was required.
struct NotAPartialOrder : Error { using Error::Error; };

/// A partial order failed completeness where a linear order was required.
struct NotALinearOrder : Error { using Error::Error; };

/// A pair of partial orders is not conjugate where conjugacy was required.
struct NotConjugate : Error { using Error::Error; };

/// A list of linear orders does not realize the claimed target.
struct NotARealizer : Error { using Error::Error; };

/// A claimed recursive partial-conjugate sequence failed verification.
struct InvalidSequence : Error { using Error::Error; };

/// An operation requiring a nonempty list was given an empty one.
struct EmptyList : Error { using Error::Error; };

/// A search exceeded its configured node or extension budget.
struct ResourceCap : Error { using Error::Error; };

/// A size argument exceeded its configured cap.
struct CapExceeded : Error { using Error::Error; };

/// A text input could not be parsed.
struct ParseError : Error { using Error::Error; };

}  // namespace posetdim
