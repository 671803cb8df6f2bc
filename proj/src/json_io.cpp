#include "gcv/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcv::io {

using nlohmann::json;

std::string cm_to_json(const Mat& sigma) {
  const int n = mode_count(sigma);
  json j;
  j["n_modes"] = n;
  j["hbar"] = 2;
  j["ordering"] = "qpqp";
  std::vector<double> flat;
  flat.reserve(4 * n * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int k = 0; k < 2 * n; ++k) flat.push_back(sigma(i, k));
  j["matrix"] = flat;
  return j.dump(2) + "\n";
}

Mat cm_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n_modes").get<int>();
  if (j.value("hbar", 2) != 2)
    throw std::invalid_argument("cm_from_json: hbar must be 2");
  if (j.value("ordering", "qpqp") != std::string("qpqp"))
    throw std::invalid_argument("cm_from_json: ordering must be qpqp");
  const auto flat = j.at("matrix").get<std::vector<double>>();
  if (flat.size() != static_cast<size_t>(4 * n * n))
    throw std::invalid_argument("cm_from_json: matrix size mismatch");
  Mat sigma(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int k = 0; k < 2 * n; ++k) sigma(i, k) = flat[2 * n * i + k];
  return sigma;
}

std::string recipe_to_json(const optics::CircuitRecipe& recipe) {
  using namespace optics;
  json arr = json::array();
  for (const auto& g : recipe) {
    json item;
    std::visit(
        [&](auto&& gate) {
          using T = std::decay_t<decltype(gate)>;
          if constexpr (std::is_same_v<T, BeamSplitter>) {
            item = {{"kind", "beam_splitter"},
                    {"i", gate.i},
                    {"j", gate.j},
                    {"tau", gate.tau}};
          } else if constexpr (std::is_same_v<T, TwoModeSqueezer>) {
            item = {{"kind", "two_mode_squeezer"},
                    {"i", gate.i},
                    {"j", gate.j},
                    {"r", gate.r}};
          } else if constexpr (std::is_same_v<T, SingleModeSqueezer>) {
            item = {{"kind", "single_mode_squeezer"},
                    {"i", gate.i},
                    {"r", gate.r}};
          } else if constexpr (std::is_same_v<T, Rotation>) {
            item = {{"kind", "rotation"}, {"i", gate.i}, {"theta", gate.theta}};
          } else if constexpr (std::is_same_v<T, Seraphique>) {
            item = {{"kind", "seraphique"},
                    {"i", gate.i},
                    {"j", gate.j},
                    {"tau", gate.tau}};
          } else if constexpr (std::is_same_v<T, TwinBeam>) {
            item = {{"kind", "twin_beam"},
                    {"i", gate.i},
                    {"j", gate.j},
                    {"r", gate.r}};
          }
        },
        g);
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

optics::CircuitRecipe recipe_from_json(const std::string& text) {
  using namespace optics;
  const json arr = json::parse(text);
  CircuitRecipe recipe;
  for (const auto& item : arr) {
    const std::string kind = item.at("kind").get<std::string>();
    if (kind == "beam_splitter") {
      recipe.push_back(BeamSplitter{item.at("i"), item.at("j"), item.at("tau")});
    } else if (kind == "two_mode_squeezer") {
      recipe.push_back(TwoModeSqueezer{item.at("i"), item.at("j"), item.at("r")});
    } else if (kind == "single_mode_squeezer") {
      recipe.push_back(SingleModeSqueezer{item.at("i"), item.at("r")});
    } else if (kind == "rotation") {
      recipe.push_back(Rotation{item.at("i"), item.at("theta")});
    } else if (kind == "seraphique") {
      recipe.push_back(Seraphique{item.at("i"), item.at("j"), item.at("tau")});
    } else if (kind == "twin_beam") {
      recipe.push_back(TwinBeam{item.at("i"), item.at("j"), item.at("r")});
    } else {
      throw std::invalid_argument("recipe_from_json: unknown gate " + kind);
    }
  }
  return recipe;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CsvWriter: column count mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += format_value(values[i]);
  }
  text_ += '\n';
}

void CsvWriter::add_row_mixed(const std::vector<std::string>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CsvWriter: column count mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += values[i];
  }
  text_ += '\n';
}

void CsvWriter::write(const std::string& path) const {
  write_file(path, text_);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace gcv::io
