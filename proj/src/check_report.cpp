#include "qpw/check_report.hpp"

#include "qpw/error.hpp"

namespace qpw {

namespace {

template <class T>
const T& lookup(const std::vector<std::pair<std::string, T>>& bindings, std::string_view name) {
  for (const auto& [key, value] : bindings)
    if (key == name) return value;
  throw PreconditionError("witness has no binding \"" + std::string(name) + "\"");
}

}  // namespace

Event Witness::event(std::string_view name) const { return lookup(events, name); }
ActId Witness::act(std::string_view name) const { return lookup(acts, name); }
Consequence Witness::consequence(std::string_view name) const { return lookup(consequences, name); }

}  // namespace qpw
