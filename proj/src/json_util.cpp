#include "json_util.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "padplace/errors.hpp"

namespace padplace::detail {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& require(const json& obj, std::string_view key, std::string_view ctx) {
  if (!obj.is_object()) throw ParseError(std::string(ctx) + ": expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    throw ParseError(std::string(ctx) + ": missing field '" + std::string(key) + "'");
  }
  return *it;
}

double number(const json& v, const std::string& ctx) {
  if (!v.is_number()) throw ParseError(ctx + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(ctx + ": not finite");
  return x;
}

Point point_from_json(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 2) throw ParseError(ctx + ": expected [x, y]");
  return {number(v[0], ctx + "[0]"), number(v[1], ctx + "[1]")};
}

json point_to_json(const Point& p) { return json::array({p.x, p.y}); }

}  // namespace padplace::detail
