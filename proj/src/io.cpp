#include "ouschro/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ouschro {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_field_csv(const std::string& path, const Field& f) {
  const Grid& g = f.grid;
  std::ostringstream os;
  for (int a = 0; a < g.m; ++a) os << 'x' << (a + 1) << ',';
  os << "re,im\n";
  double x[3];
  for (std::int64_t j = 0; j < g.size(); ++j) {
    g.node(j, x);
    for (int a = 0; a < g.m; ++a) os << fmt17(x[a]) << ',';
    os << fmt17(f.values[j].real()) << ',' << fmt17(f.values[j].imag()) << '\n';
  }
  write_file_atomic(path, os.str());
}

Field read_field_csv(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_field_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("read_field_csv: empty file " + path);
  Field f{grid, Eigen::ArrayXcd(grid.size())};
  double x[3];
  for (std::int64_t j = 0; j < grid.size(); ++j) {
    if (!std::getline(in, line))
      throw std::runtime_error("read_field_csv: truncated file " + path);
    std::istringstream ls(line);
    std::string cell;
    double vals[5];
    int count = 0;
    while (std::getline(ls, cell, ',') && count < 5)
      vals[count++] = std::stod(cell);
    if (count != grid.m + 2)
      throw std::runtime_error("read_field_csv: bad row in " + path);
    grid.node(j, x);
    for (int a = 0; a < grid.m; ++a)
      if (std::abs(vals[a] - x[a]) > 1e-12 * (1.0 + std::abs(x[a])))
        throw std::runtime_error("read_field_csv: node coordinates do not match grid");
    f.values[j] = Complex(vals[grid.m], vals[grid.m + 1]);
  }
  return f;
}

Json gaussian_to_json(const GaussianExponential& g) {
  Json j;
  j["m"] = g.m;
  j["re_a"] = g.a.real();
  j["im_a"] = g.a.imag();
  Json re_b = Json::array(), im_b = Json::array();
  for (int a = 0; a < g.m; ++a) {
    re_b.push_back(g.b[a].real());
    im_b.push_back(g.b[a].imag());
  }
  j["re_b"] = re_b;
  j["im_b"] = im_b;
  j["re_c"] = g.c.real();
  j["im_c"] = g.c.imag();
  return j;
}

GaussianExponential gaussian_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  ComplexVector b(m);
  for (int a = 0; a < m; ++a)
    b[a] = Complex(j.at("re_b").at(a).get<double>(),
                   j.at("im_b").at(a).get<double>());
  return GaussianExponential(
      m, Complex(j.at("re_a").get<double>(), j.at("im_a").get<double>()),
      std::move(b), Complex(j.at("re_c").get<double>(), j.at("im_c").get<double>()));
}

Json grid_to_json(const Grid& g) {
  return Json{{"m", g.m}, {"n", g.n}, {"r", g.r}};
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.parent_path() /
                       (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace ouschro
