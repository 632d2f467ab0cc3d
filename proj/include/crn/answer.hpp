#ifndef CRN_ANSWER_HPP
#define CRN_ANSWER_HPP

#include <string_view>

namespace crn {

enum class Answer { yes, no, unknown };

constexpr std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace crn

#endif  // CRN_ANSWER_HPP
