#include "greycast/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace greycast {

std::string format_shortest(double value) {
	std::array<char, 64> buf{};
	const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
	if (ec != std::errc{}) {
		return "nan";
	}
	return std::string(buf.data(), end);
}

std::string format_fixed2(double value) {
	std::array<char, 64> buf{};
	const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 2);
	if (ec != std::errc{}) {
		return "nan";
	}
	return std::string(buf.data(), end);
}

} // namespace greycast
