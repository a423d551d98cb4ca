#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "jacmom/coefficients.hpp"
#include "jacmom/exppoly.hpp"
#include "jacmom/version.hpp"

namespace jacmom {

// Serialized forms keep every number as an exact "p/q" string so that a
// round trip through disk is lossless.

inline nlohmann::json exppoly_to_json(const ExpPoly& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coef] : poly.terms()) {
    terms.push_back({{"coef", coef.str()},
                     {"rate", key.first.str()},
                     {"power", key.second}});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

inline ExpPoly exppoly_from_json(const nlohmann::json& j) {
  ExpPoly poly;
  for (const auto& term : j.at("terms")) {
    poly.add_term(Rational(term.at("coef").get<std::string>()),
                  Rational(term.at("rate").get<std::string>()),
                  term.at("power").get<int>());
  }
  return poly;
}

inline nlohmann::json coeff_table_to_json(const CoeffTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, entry] : table.entries()) {
    entries.push_back({{"n", std::get<0>(key)},
                       {"h", std::get<1>(key)},
                       {"l", std::get<2>(key)},
                       {"value", entry.value.str()},
                       {"route", route_name(entry.route)}});
  }
  return nlohmann::json{{"format_version", kTableFormatVersion},
                        {"lambda", table.params().lambda.str()},
                        {"theta", table.params().theta.str()},
                        {"n_max", table.n_max()},
                        {"entries", std::move(entries)}};
}

inline CoeffTable coeff_table_from_json(const nlohmann::json& j) {
  LimitParams lp(Rational(j.at("lambda").get<std::string>()),
                 Rational(j.at("theta").get<std::string>()));
  CoeffTable table(lp, j.at("n_max").get<long>());
  for (const auto& entry : j.at("entries")) {
    table.set(entry.at("n").get<long>(), entry.at("h").get<long>(),
              entry.at("l").get<long>(),
              Rational(entry.at("value").get<std::string>()),
              route_from_name(entry.at("route").get<std::string>()));
  }
  return table;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::optional<std::string> read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- coefficient table cache ----

// File names encode the exact parameters plus the format version, e.g.
// coeff_l1-2_t1-3_n6_division_v1.json, so distinct configurations never
// collide and version bumps invalidate old files automatically.
inline std::string cache_slug(const Rational& v) {
  std::string s = v.str();
  for (char& c : s) {
    if (c == '/') c = '-';
  }
  return s;
}

inline std::string cache_file_name(const LimitParams& lp, long n_max,
                                   Route route) {
  std::ostringstream name;
  name << "coeff_l" << cache_slug(lp.lambda) << "_t" << cache_slug(lp.theta)
       << "_n" << n_max << "_" << route_name(route) << "_v"
       << kTableFormatVersion << ".json";
  return name.str();
}

inline std::optional<CoeffTable> load_coeff_table(const std::string& path) {
  auto text = read_text_file(path);
  if (!text) return std::nullopt;
  try {
    return coeff_table_from_json(nlohmann::json::parse(*text));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store_coeff_table(const std::string& path,
                              const CoeffTable& table) {
  write_text_file(path, coeff_table_to_json(table).dump(2) + "\n");
}

// Returns a table covering all n <= n_max, loading it from cache_dir when a
// matching file exists and writing one back after a fresh build.  An empty
// cache_dir disables caching entirely.
inline CoeffTable ensure_coeff_table(const LimitParams& lp, long n_max,
                                     Route route, int threads,
                                     const std::string& cache_dir) {
  std::string path;
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    path = (std::filesystem::path(cache_dir) /
            cache_file_name(lp, n_max, route))
               .string();
    if (auto cached = load_coeff_table(path)) {
      if (cached->params() == lp && cached->n_max() >= n_max) return *cached;
    }
  }
  CoeffTable table = build_table(lp, n_max, route, threads);
  if (!path.empty()) store_coeff_table(path, table);
  return table;
}

}  // namespace jacmom
