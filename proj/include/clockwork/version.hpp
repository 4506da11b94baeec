#ifndef CLOCKWORK_VERSION_HPP
#define CLOCKWORK_VERSION_HPP

#include <string_view>

namespace clockwork {

inline constexpr std::string_view kVersion = "0.1.0";

} // namespace clockwork

#endif
