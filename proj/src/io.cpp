#include "qcldpc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qcldpc::io {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string::npos && line[pos] == '#';
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, std::size_t line_no) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

// Reads lines, skipping comments and blanks, tracking the line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // next line that carries data; false at end of input
  bool next_data_line(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (is_blank(line) || is_comment(line)) continue;
      return true;
    }
    return false;
  }

  // next non-comment line, blanks included (codeword blocks may be empty)
  bool next_raw_line(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (is_comment(line)) continue;
      return true;
    }
    return false;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<long> read_header(LineReader& reader, std::size_t expected,
                              const char* what) {
  std::string line;
  if (!reader.next_data_line(line))
    throw parse_error(reader.line_no() + 1, std::string("missing ") + what +
                                                " header");
  const auto toks = tokenize(line);
  if (toks.size() != expected)
    throw parse_error(reader.line_no(),
                      std::string(what) + " header needs " +
                          std::to_string(expected) + " fields, got " +
                          std::to_string(toks.size()));
  std::vector<long> out;
  for (const auto& t : toks) out.push_back(parse_int(t, reader.line_no()));
  return out;
}

void check_dims(long m, long n, std::size_t line_no) {
  if (m < 1 || n < 1)
    throw parse_error(line_no, "dimensions must be positive");
}

}  // namespace

WeightMatrix read_weight_matrix(std::istream& in) {
  LineReader reader(in);
  const auto hdr = read_header(reader, 2, "weight matrix");
  check_dims(hdr[0], hdr[1], reader.line_no());
  WeightMatrix wm(static_cast<std::size_t>(hdr[0]),
                  static_cast<std::size_t>(hdr[1]));
  std::string line;
  for (std::size_t i = 0; i < wm.rows(); ++i) {
    if (!reader.next_data_line(line))
      throw parse_error(reader.line_no() + 1,
                        "expected " + std::to_string(wm.rows()) +
                            " matrix rows, got " + std::to_string(i));
    const auto toks = tokenize(line);
    if (toks.size() != wm.cols())
      throw parse_error(reader.line_no(),
                        "row has " + std::to_string(toks.size()) +
                            " entries, expected " + std::to_string(wm.cols()));
    for (std::size_t j = 0; j < wm.cols(); ++j) {
      const long v = parse_int(toks[j], reader.line_no());
      if (v != 0 && v != 1)
        throw parse_error(reader.line_no(),
                          "weight matrix entries must be 0 or 1");
      wm.set(i, j, static_cast<int>(v));
    }
  }
  return wm;
}

ExponentMatrix read_exponent_matrix(std::istream& in) {
  LineReader reader(in);
  const auto hdr = read_header(reader, 3, "exponent matrix");
  check_dims(hdr[0], hdr[1], reader.line_no());
  if (hdr[2] < 1 || hdr[2] > static_cast<long>(max_modulus))
    throw parse_error(reader.line_no(),
                      "circulant size must be in [1, " +
                          std::to_string(max_modulus) + "]");
  ExponentMatrix em(static_cast<std::size_t>(hdr[0]),
                    static_cast<std::size_t>(hdr[1]),
                    static_cast<std::uint32_t>(hdr[2]));
  std::string line;
  for (std::size_t i = 0; i < em.rows(); ++i) {
    if (!reader.next_data_line(line))
      throw parse_error(reader.line_no() + 1,
                        "expected " + std::to_string(em.rows()) +
                            " matrix rows, got " + std::to_string(i));
    const auto toks = tokenize(line);
    if (toks.size() != em.cols())
      throw parse_error(reader.line_no(),
                        "row has " + std::to_string(toks.size()) +
                            " entries, expected " + std::to_string(em.cols()));
    for (std::size_t j = 0; j < em.cols(); ++j) {
      const long v = parse_int(toks[j], reader.line_no());
      if (v < -1 || v >= hdr[2])
        throw parse_error(reader.line_no(),
                          "entry must be -1 (absent) or an exponent in [0, " +
                              std::to_string(hdr[2]) + ")");
      em.set(i, j, static_cast<int>(v));
    }
  }
  return em;
}

BinaryMatrix read_binary_matrix(std::istream& in) {
  LineReader reader(in);
  const auto hdr = read_header(reader, 2, "binary matrix");
  check_dims(hdr[0], hdr[1], reader.line_no());
  BinaryMatrix bm(static_cast<std::size_t>(hdr[0]),
                  static_cast<std::size_t>(hdr[1]));
  std::string line;
  for (std::size_t i = 0; i < bm.rows(); ++i) {
    if (!reader.next_data_line(line))
      throw parse_error(reader.line_no() + 1, "truncated matrix body");
    const auto toks = tokenize(line);
    if (toks.size() != bm.cols())
      throw parse_error(reader.line_no(),
                        "row has " + std::to_string(toks.size()) +
                            " entries, expected " + std::to_string(bm.cols()));
    for (std::size_t j = 0; j < bm.cols(); ++j) {
      const long v = parse_int(toks[j], reader.line_no());
      if (v != 0 && v != 1)
        throw parse_error(reader.line_no(), "entries must be 0 or 1");
      if (v) bm.set(i, j);
    }
  }
  return bm;
}

CodewordPoly read_codeword(std::istream& in) {
  LineReader reader(in);
  const auto hdr = read_header(reader, 2, "codeword");
  check_dims(hdr[0], 1, reader.line_no());
  if (hdr[1] < 1 || hdr[1] > static_cast<long>(max_modulus))
    throw parse_error(reader.line_no(), "modulus out of range");
  const auto n = static_cast<std::size_t>(hdr[0]);
  const auto s = static_cast<std::uint32_t>(hdr[1]);
  CodewordPoly c(n, s);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next_raw_line(line))
      throw parse_error(reader.line_no() + 1,
                        "expected " + std::to_string(n) + " block lines, got " +
                            std::to_string(i));
    std::vector<std::uint32_t> support;
    for (const auto& tok : tokenize(line)) {
      const long e = parse_int(tok, reader.line_no());
      if (e < 0 || e >= hdr[1])
        throw parse_error(reader.line_no(),
                          "exponent out of range [0, " +
                              std::to_string(hdr[1]) + ")");
      support.push_back(static_cast<std::uint32_t>(e));
    }
    try {
      c.at(i) = CyclicPoly::from_support(s, support);
    } catch (const std::invalid_argument& e) {
      throw parse_error(reader.line_no(), e.what());
    }
  }
  return c;
}

void write_weight_matrix(std::ostream& out, const WeightMatrix& wm) {
  out << wm.rows() << " " << wm.cols() << "\n";
  for (std::size_t i = 0; i < wm.rows(); ++i) {
    for (std::size_t j = 0; j < wm.cols(); ++j)
      out << (j ? " " : "") << wm.get(i, j);
    out << "\n";
  }
}

void write_exponent_matrix(std::ostream& out, const ExponentMatrix& em) {
  out << em.rows() << " " << em.cols() << " " << em.modulus() << "\n";
  for (std::size_t i = 0; i < em.rows(); ++i) {
    for (std::size_t j = 0; j < em.cols(); ++j)
      out << (j ? " " : "") << em.get(i, j);
    out << "\n";
  }
}

void write_binary_matrix(std::ostream& out, const BinaryMatrix& bm) {
  out << bm.rows() << " " << bm.cols() << "\n";
  for (std::size_t i = 0; i < bm.rows(); ++i) {
    for (std::size_t j = 0; j < bm.cols(); ++j)
      out << (j ? " " : "") << (bm.get(i, j) ? 1 : 0);
    out << "\n";
  }
}

void write_codeword(std::ostream& out, const CodewordPoly& c) {
  out << c.block_count() << " " << c.modulus() << "\n";
  for (std::size_t i = 0; i < c.block_count(); ++i) {
    const auto support = c.at(i).support();
    for (std::size_t t = 0; t < support.size(); ++t)
      out << (t ? " " : "") << support[t];
    out << "\n";
  }
}

MatrixFile load_matrix(const std::string& path) {
  std::ifstream peek(path);
  if (!peek) throw io_error("cannot open '" + path + "'");
  std::string line;
  std::size_t fields = 0;
  while (std::getline(peek, line)) {
    if (is_blank(line) || is_comment(line)) continue;
    fields = tokenize(line).size();
    break;
  }
  std::ifstream in(path);
  if (fields == 2) return read_weight_matrix(in);
  if (fields == 3) return read_exponent_matrix(in);
  throw parse_error(1, "unrecognized matrix header in '" + path +
                           "' (want 'm n' or 'm n s')");
}

CodewordPoly load_codeword(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  return read_codeword(in);
}

}  // namespace qcldpc::io
