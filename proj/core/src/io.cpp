#include "ksz/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ksz {

namespace {

int next_sign_char(std::istream& in, const char* format) {
  int c;
  while ((c = in.get()) != EOF) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+') return +1;
    if (c == '-') return -1;
    throw std::runtime_error(std::string(format) + ": unexpected character '" +
                             static_cast<char>(c) + "'");
  }
  throw std::runtime_error(std::string(format) + ": unexpected end of input");
}

void expect_only_whitespace(std::istream& in, const char* format) {
  int c;
  while ((c = in.get()) != EOF) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::runtime_error(std::string(format) + ": trailing content '" +
                               static_cast<char>(c) + "'");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_pm1(std::ostream& out, const SignMatrix& m) {
  out << m.order() << '\n';
  std::string line(static_cast<std::size_t>(m.order()), '+');
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) line[static_cast<std::size_t>(j)] = m.sign(i, j) > 0 ? '+' : '-';
    out << line << '\n';
  }
}

SignMatrix read_pm1(std::istream& in) {
  long long order = 0;
  if (!(in >> order) || order < 1) throw std::runtime_error("pm1: invalid order line");
  if (order > (1 << 20)) throw std::runtime_error("pm1: order implausibly large");
  SignMatrix m(static_cast<int>(order));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) m.set_sign(i, j, next_sign_char(in, "pm1"));
  expect_only_whitespace(in, "pm1");
  return m;
}

void write_pm1_file(const std::string& path, const SignMatrix& m) {
  auto out = open_output(path);
  write_pm1(out, m);
}

SignMatrix read_pm1_file(const std::string& path) {
  auto in = open_input(path);
  return read_pm1(in);
}

void write_pmt(std::ostream& out, const SignTensor& t) {
  out << t.arity();
  for (int d : t.dims()) out << ' ' << d;
  out << '\n';
  std::string line(static_cast<std::size_t>(t.last_dim()), '+');
  for (std::int64_t f = 0; f < t.fiber_count(); ++f) {
    for (int j = 0; j < t.last_dim(); ++j)
      line[static_cast<std::size_t>(j)] = t.sign_in_fiber(f, j) > 0 ? '+' : '-';
    out << line << '\n';
  }
}

SignTensor read_pmt(std::istream& in) {
  int arity = 0;
  if (!(in >> arity) || arity < 1) throw std::runtime_error("pmt: invalid arity");
  if (arity > 16) throw std::runtime_error("pmt: arity implausibly large");
  std::vector<int> dims(static_cast<std::size_t>(arity));
  for (int& d : dims)
    if (!(in >> d) || d < 1) throw std::runtime_error("pmt: invalid dimension");
  SignTensor t(dims);
  for (std::int64_t f = 0; f < t.fiber_count(); ++f)
    for (int j = 0; j < t.last_dim(); ++j)
      t.set_sign_in_fiber(f, j, next_sign_char(in, "pmt"));
  expect_only_whitespace(in, "pmt");
  return t;
}

void write_pmt_file(const std::string& path, const SignTensor& t) {
  auto out = open_output(path);
  write_pmt(out, t);
}

SignTensor read_pmt_file(const std::string& path) {
  auto in = open_input(path);
  return read_pmt(in);
}

}  // namespace ksz
