#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "qcldpc/qc_code.hpp"

namespace qcldpc::io {

// Parse failure with the 1-based line number of the offending input line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text formats. Lines starting with '#' are comments everywhere.
//
//   weight matrix    header "m n",   then m rows of n 0/1 entries
//   exponent matrix  header "m n s", then m rows of n entries,
//                    -1 = absent block, otherwise an exponent in [0, s)
//   binary grid      header "rows cols", then 0/1 rows (expand output)
//   codeword         header "n s", then exactly n lines, each the support of
//                    one block as space-separated exponents; a blank line is
//                    the zero block

WeightMatrix read_weight_matrix(std::istream& in);
ExponentMatrix read_exponent_matrix(std::istream& in);
BinaryMatrix read_binary_matrix(std::istream& in);
CodewordPoly read_codeword(std::istream& in);

void write_weight_matrix(std::ostream& out, const WeightMatrix& wm);
void write_exponent_matrix(std::ostream& out, const ExponentMatrix& em);
void write_binary_matrix(std::ostream& out, const BinaryMatrix& bm);
void write_codeword(std::ostream& out, const CodewordPoly& c);

using MatrixFile = std::variant<WeightMatrix, ExponentMatrix>;

// Distinguishes the two matrix formats by header token count (2 vs 3).
MatrixFile load_matrix(const std::string& path);
CodewordPoly load_codeword(const std::string& path);

}  // namespace qcldpc::io
