#ifndef POSR_ERROR_HPP
#define POSR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace posr {

enum class Errc {
  closure_cap_exceeded,
  empty_generator_list,
  invalid_parameter,
  unknown_generator,
  not_two_generated,
  index_out_of_range,
  invalid_connection_sets,
  budget_exceeded,
  too_large,
  out_of_range,
  no_candidate,
  precondition_failed,
  unsupported,
  unsupported_format,
  parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::closure_cap_exceeded: return "ClosureCapExceeded";
    case Errc::empty_generator_list: return "EmptyGeneratorList";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::not_two_generated: return "NotTwoGenerated";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_connection_sets: return "InvalidConnectionSets";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::too_large: return "TooLarge";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::no_candidate: return "NoCandidate";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::unsupported: return "Unsupported";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace posr

#endif  // POSR_ERROR_HPP
