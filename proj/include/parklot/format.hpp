#pragma once

#include <span>
#include <sstream>
#include <string>
#include <string_view>

namespace parklot {

template <class T>
std::string join(std::span<const T> values, std::string_view sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << sep;
    os << values[i];
  }
  return os.str();
}

template <class Container>
std::string join(const Container& values, std::string_view sep = ",") {
  return join(std::span<const typename Container::value_type>(values.data(), values.size()), sep);
}

} // namespace parklot
