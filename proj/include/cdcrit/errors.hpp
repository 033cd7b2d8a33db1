#pragma once

#include <stdexcept>
#include <string>

namespace cdcrit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct EmptyJoin : Error { using Error::Error; };
struct InvalidSubgraph : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct InvalidWitness : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct NotB2Member : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace cdcrit
