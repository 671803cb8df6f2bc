#ifndef GCV_JSON_IO_HPP
#define GCV_JSON_IO_HPP

#include <string>

#include "gcv/optics.hpp"

// File formats: CM JSON {"n_modes", "hbar": 2, "ordering": "qpqp",
// "matrix": row-major}, recipe JSON as an ordered gate array, CSV with
// mandatory header and 12 significant digits.
namespace gcv::io {

std::string cm_to_json(const Mat& sigma);
Mat cm_from_json(const std::string& text);

std::string recipe_to_json(const optics::CircuitRecipe& recipe);
optics::CircuitRecipe recipe_from_json(const std::string& text);

// 12 significant digits, '.' decimal separator, no locale surprises.
std::string format_value(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<double>& values);
  void add_row_mixed(const std::vector<std::string>& values);
  const std::string& text() const { return text_; }
  void write(const std::string& path) const;

 private:
  std::string text_;
  size_t columns_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gcv::io

#endif
