#include "annulus/series_json.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "annulus/error.hpp"

namespace annulus {

namespace {

using nlohmann::json;
constexpr std::int64_t kMaxOrder = 1 << 20;

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex read_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::Format, where + ": expected [re, im]");
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::Format, where + ": non-finite coefficient");
  }
  return z;
}

}  // namespace

std::string series_to_json(const HarmonicSeries& h) {
  json a_pos = json::array(), b_pos = json::array(), a_neg = json::array(), b_neg = json::array();
  for (int n = 1; n <= h.order(); ++n) {
    a_pos.push_back(pair(h.a(n)));
    b_pos.push_back(pair(h.b(n)));
    a_neg.push_back(pair(h.a(-n)));
    b_neg.push_back(pair(h.b(-n)));
  }
  // ordered_json keeps the key order fixed for byte-stable output.
  nlohmann::ordered_json out;
  out["N"] = h.order();
  out["a_pos"] = a_pos;
  out["b_pos"] = b_pos;
  out["a_neg"] = a_neg;
  out["b_neg"] = b_neg;
  out["a0"] = pair(h.a(0));
  out["b0"] = pair(h.b(0));
  return out.dump(2) + "\n";
}

HarmonicSeries series_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("N") || !doc["N"].is_number_integer()) {
    throw Error(ErrorKind::Format, "series JSON needs an integer \"N\"");
  }
  const std::int64_t declared = doc["N"].get<std::int64_t>();
  if (declared < 0 || declared > kMaxOrder) {
    throw Error(ErrorKind::Format, "series JSON: N must lie in [0, " + std::to_string(kMaxOrder) + "]");
  }
  const int order = static_cast<int>(declared);
  HarmonicSeries h(order);
  const auto read_array = [&](const char* key, int sign, bool is_a) {
    if (!doc.contains(key)) return;
    const json& arr = doc[key];
    if (!arr.is_array() || arr.size() > static_cast<std::size_t>(order)) {
      throw Error(ErrorKind::Format, std::string(key) + ": expected an array of at most N entries");
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const int n = sign * static_cast<int>(i + 1);
      const Complex z = read_pair(arr[i], std::string(key) + "[" + std::to_string(i) + "]");
      if (is_a) h.set_a(n, z); else h.set_b(n, z);
    }
  };
  read_array("a_pos", 1, true);
  read_array("b_pos", 1, false);
  read_array("a_neg", -1, true);
  read_array("b_neg", -1, false);
  if (doc.contains("a0")) h.set_a(0, read_pair(doc["a0"], "a0"));
  if (doc.contains("b0")) h.set_b(0, read_pair(doc["b0"], "b0"));
  return h;
}

HarmonicSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read series file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return series_from_json(buf.str());
}

void save_series(const HarmonicSeries& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write series file " + path);
  out << series_to_json(h);
}

}  // namespace annulus
