#include "hyperschrod/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hyperschrod/errors.hpp"

namespace hyperschrod {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table read_table(const std::string& path, std::size_t ncols) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty file: " + path);
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  if (t.header.size() != ncols)
    throw IoError("unexpected column count in " + path);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw IoError("bad number at " + path + ":" + std::to_string(lineno));
      }
    }
    if (row.size() != ncols)
      throw IoError("short row at " + path + ":" + std::to_string(lineno));
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw IoError("no data rows in " + path);
  return t;
}

void check_uniform(const std::vector<double>& axis, const std::string& path) {
  if (axis.size() < 2) throw GridError("too few samples in " + path);
  double step = axis[1] - axis[0];
  if (!(step > 0.0)) throw GridError("axis not increasing in " + path);
  for (std::size_t i = 1; i < axis.size(); ++i) {
    double expect = axis[0] + step * static_cast<double>(i);
    if (std::abs(axis[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
      throw GridError("axis not uniform in " + path);
  }
}

} // namespace

void write_radial_csv(const std::string& path, const RadialProfile& f) {
  std::ofstream out = open_out(path);
  out << "r,re,im,abs\n";
  for (std::size_t i = 0; i < f.grid.n; ++i)
    out << fmt(f.grid.r(i)) << ',' << fmt(f.v[i].real()) << ',' << fmt(f.v[i].imag()) << ','
        << fmt(std::abs(f.v[i])) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_spectral_csv(const std::string& path, const SpectralProfile& F) {
  std::ofstream out = open_out(path);
  out << "lambda,re,im\n";
  for (std::size_t k = 0; k < F.grid.n; ++k)
    out << fmt(F.grid.lam(k)) << ',' << fmt(F.v[k].real()) << ',' << fmt(F.v[k].imag()) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_flat_csv(const std::string& path, const FlatField& f) {
  std::ofstream out = open_out(path);
  if (f.grid.dim == 1) {
    out << "x,re,im,abs\n";
    for (std::size_t i = 0; i < f.grid.n; ++i)
      out << fmt(f.grid.x(i)) << ',' << fmt(f.v[i].real()) << ',' << fmt(f.v[i].imag()) << ','
          << fmt(std::abs(f.v[i])) << '\n';
  } else {
    out << "x1,x2,re,im,abs\n";
    for (std::size_t i = 0; i < f.grid.n; ++i)
      for (std::size_t j = 0; j < f.grid.n; ++j) {
        const cplx& z = f.at(i, j);
        out << fmt(f.grid.x(i)) << ',' << fmt(f.grid.x(j)) << ',' << fmt(z.real()) << ','
            << fmt(z.imag()) << ',' << fmt(std::abs(z)) << '\n';
      }
  }
  if (!out) throw IoError("write failed: " + path);
}

RadialProfile read_radial_csv(const std::string& path, SpaceTag tag) {
  Table t = read_table(path, 4);
  std::vector<double> axis(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) axis[i] = t.rows[i][0];
  check_uniform(axis, path);
  if (std::abs(axis[0]) > 1e-12) throw GridError("radial grid must start at r = 0: " + path);

  RadialProfile f;
  f.space = tag;
  f.grid.dr = axis[1] - axis[0];
  f.grid.n = t.rows.size();
  f.v.resize(f.grid.n);
  for (std::size_t i = 0; i < f.grid.n; ++i) f.v[i] = cplx(t.rows[i][1], t.rows[i][2]);
  require_all_finite(f.v, ("radial csv " + path).c_str());
  return f;
}

FlatField read_flat_csv(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw IoError("cannot open for reading: " + path);
  std::string head;
  std::getline(probe, head);
  probe.close();
  bool two_d = head.rfind("x1,", 0) == 0;

  FlatField f;
  if (!two_d) {
    Table t = read_table(path, 4);
    std::vector<double> axis(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) axis[i] = t.rows[i][0];
    check_uniform(axis, path);
    f.grid.dim = 1;
    f.grid.n = t.rows.size();
    f.grid.extent = -axis[0];
    if (!(f.grid.extent > 0.0)) throw GridError("flat grid must start at -L: " + path);
    f.v.resize(f.grid.n);
    for (std::size_t i = 0; i < f.grid.n; ++i) f.v[i] = cplx(t.rows[i][1], t.rows[i][2]);
  } else {
    Table t = read_table(path, 5);
    // rows come in blocks of constant x1; infer per-axis count from the
    // first block and require a square layout
    std::size_t n = 0;
    while (n < t.rows.size() && t.rows[n][0] == t.rows[0][0]) ++n;
    if (n == 0 || t.rows.size() != n * n)
      throw GridError("flat 2d grid must be square: " + path);
    std::vector<double> axis(n);
    for (std::size_t j = 0; j < n; ++j) axis[j] = t.rows[j][1];
    check_uniform(axis, path);
    f.grid.dim = 2;
    f.grid.n = n;
    f.grid.extent = -axis[0];
    if (!(f.grid.extent > 0.0)) throw GridError("flat grid must start at -L: " + path);
    f.v.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double>& row = t.rows[i * n + j];
        if (std::abs(row[1] - axis[j]) > 1e-9 * std::max(1.0, std::abs(axis[j])))
          throw GridError("flat 2d grid rows out of order: " + path);
        f.at(i, j) = cplx(row[2], row[3]);
      }
  }
  require_all_finite(f.v, ("flat csv " + path).c_str());
  return f;
}

} // namespace hyperschrod
