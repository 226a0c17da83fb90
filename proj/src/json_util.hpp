#pragma once

// Helpers shared by the JSON readers. Not installed.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "padplace/geometry.hpp"

namespace padplace::detail {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

json parse_json(std::string_view text, std::string_view what);

const json& require(const json& obj, std::string_view key, std::string_view ctx);
double number(const json& v, const std::string& ctx);
Point point_from_json(const json& v, const std::string& ctx);
json point_to_json(const Point& p);

}  // namespace padplace::detail
