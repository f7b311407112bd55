#pragma once

// Text file formats for scenes, far-field tensors and indicator maps, plus
// 16-bit PGM export. Numbers are written with %.17g so a write/read/write
// cycle is byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsm/acquisition.hpp"
#include "dsm/grid.hpp"
#include "dsm/scene.hpp"

namespace dsm::io {

class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_number(std::string_view token) {
  const std::string s(token);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw format_error("not a number: '" + s + "'");
  return v;
}

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// Writes to a sibling temporary file and renames it into place.
inline void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move into place: " + path.string() + " (" + ec.message() + ")");
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty lines that do not start with '#'.
inline std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scene: CSV with a fixed header row.

inline constexpr std::string_view scene_header = "center_x,center_y,half_length,rotation_radians";

inline std::string write_scene(const scene& s) {
  std::string out;
  out += "# crack scene\n";
  out += "# length unit: same as the wavelength\n";
  out += "# crack = {center + s [cos rotation, sin rotation] : -half_length <= s <= half_length}\n";
  out += "# rotated segments R_a[s + p, s + q] are stored as center R_a[p, q], angle a + pi/4, half_length l\n";
  out += "# (half_length l rather than sqrt(2) l; the source parameterization leaves this ambiguous)\n";
  out += std::string(scene_header) + "\n";
  for (const auto& c : s.cracks) {
    out += format_number(c.center.x) + "," + format_number(c.center.y) + "," + format_number(c.half_length) + "," +
           format_number(c.rotation) + "\n";
  }
  return out;
}

inline scene read_scene(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.empty() || lines.front() != scene_header)
    throw format_error("scene file must start with header '" + std::string(scene_header) + "'");
  scene s;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 4) throw format_error("scene row " + std::to_string(i) + " needs 4 fields");
    try {
      s.cracks.emplace_back(vec2{parse_number(f[0]), parse_number(f[1])}, parse_number(f[2]), parse_number(f[3]));
    } catch (const std::invalid_argument& e) {
      throw format_error("scene row " + std::to_string(i) + ": " + e.what());
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Far-field tensor: keyed header then one "f l n re im" row per entry.

inline std::string write_tensor(const far_field_tensor& t) {
  const auto& cfg = t.config();
  std::string out = "# far-field tensor\n";
  out += "F " + std::to_string(t.frequencies()) + "\n";
  out += "L " + std::to_string(t.incidents()) + "\n";
  out += "N " + std::to_string(t.observations()) + "\n";
  out += "wavenumbers";
  for (double k : cfg.wavenumbers) out += " " + format_number(k);
  out += "\nincident_angles";
  for (double a : cfg.incident_angles) out += " " + format_number(a);
  out += "\nf l n re im\n";
  for (std::size_t f = 0; f < t.frequencies(); ++f)
    for (std::size_t l = 0; l < t.incidents(); ++l)
      for (std::size_t n = 0; n < t.observations(); ++n) {
        const complex v = t.at(f, l, n);
        out += std::to_string(f) + " " + std::to_string(l) + " " + std::to_string(n) + " " + format_number(v.real()) +
               " " + format_number(v.imag()) + "\n";
      }
  return out;
}

inline far_field_tensor read_tensor(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.size() < 6) throw format_error("tensor file header is incomplete");
  auto keyed = [&](std::size_t i, std::string_view key) {
    auto f = split(lines[i], ' ');
    if (f.empty() || f[0] != key) throw format_error("expected '" + std::string(key) + "' on header line " + std::to_string(i + 1));
    f.erase(f.begin());
    return f;
  };
  auto count = [&](std::size_t i, std::string_view key) {
    const auto f = keyed(i, key);
    if (f.size() != 1) throw format_error("malformed '" + std::string(key) + "' line");
    const double v = parse_number(f[0]);
    if (v < 0 || v != std::floor(v)) throw format_error("'" + std::string(key) + "' must be a count");
    return static_cast<std::size_t>(v);
  };
  const std::size_t nf = count(0, "F"), nl = count(1, "L"), nn = count(2, "N");
  acquisition_config cfg;
  cfg.observation_count = nn;
  for (const auto& s : keyed(3, "wavenumbers")) cfg.wavenumbers.push_back(parse_number(s));
  for (const auto& s : keyed(4, "incident_angles")) cfg.incident_angles.push_back(parse_number(s));
  if (cfg.wavenumbers.size() != nf || cfg.incident_angles.size() != nl)
    throw format_error("header counts do not match wavenumber/angle lists");
  if (lines[5] != "f l n re im") throw format_error("missing 'f l n re im' column line");

  far_field_tensor t;
  try {
    t = far_field_tensor(cfg);
  } catch (const std::invalid_argument& e) {
    throw format_error(std::string("invalid acquisition header: ") + e.what());
  }
  if (lines.size() - 6 != nf * nl * nn) throw format_error("tensor row count does not match F*L*N");
  std::vector<bool> seen(nf * nl * nn, false);
  for (std::size_t r = 6; r < lines.size(); ++r) {
    const auto f = split(lines[r], ' ');
    if (f.size() != 5) throw format_error("tensor row needs 5 fields: " + lines[r]);
    const auto fi = static_cast<std::size_t>(parse_number(f[0]));
    const auto li = static_cast<std::size_t>(parse_number(f[1]));
    const auto ni = static_cast<std::size_t>(parse_number(f[2]));
    if (fi >= nf || li >= nl || ni >= nn) throw format_error("tensor index out of range: " + lines[r]);
    const std::size_t flat = (fi * nl + li) * nn + ni;
    if (seen[flat]) throw format_error("duplicate tensor entry: " + lines[r]);
    seen[flat] = true;
    t.at(fi, li, ni) = complex(parse_number(f[3]), parse_number(f[4]));
  }
  if (!t.all_finite()) throw format_error("tensor contains non-finite values");
  return t;
}

// ---------------------------------------------------------------------------
// Indicator map: CSV, grid line then ny rows of nx values, y ascending.

inline constexpr std::string_view map_header = "x_min,x_max,y_min,y_max,nx,ny,zero_map";

inline std::string write_map_csv(const indicator_map& m) {
  const auto& g = m.grid;
  std::string out = "# indicator map, row j holds y_j ascending, column i holds x_i ascending\n";
  out += std::string(map_header) + "\n";
  out += format_number(g.x_min) + "," + format_number(g.x_max) + "," + format_number(g.y_min) + "," +
         format_number(g.y_max) + "," + std::to_string(g.nx) + "," + std::to_string(g.ny) + "," +
         (m.zero_map ? "1" : "0") + "\n";
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      if (i) out += ",";
      out += format_number(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

inline indicator_map read_map_csv(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.size() < 2 || lines[0] != map_header) throw format_error("map file must start with '" + std::string(map_header) + "'");
  const auto h = split(lines[1], ',');
  if (h.size() != 7) throw format_error("map grid line needs 7 fields");
  indicator_map m;
  m.grid = {parse_number(h[0]), parse_number(h[1]), parse_number(h[2]), parse_number(h[3]),
            static_cast<std::size_t>(parse_number(h[4])), static_cast<std::size_t>(parse_number(h[5]))};
  try {
    m.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw format_error(std::string("invalid map grid: ") + e.what());
  }
  m.zero_map = h[6] == "1";
  if (lines.size() != 2 + m.grid.ny) throw format_error("map row count does not match ny");
  m.values.reserve(m.grid.size());
  for (std::size_t j = 0; j < m.grid.ny; ++j) {
    const auto row = split(lines[2 + j], ',');
    if (row.size() != m.grid.nx) throw format_error("map row " + std::to_string(j) + " does not have nx values");
    for (const auto& v : row) m.values.push_back(parse_number(v));
  }
  return m;
}

/// Binary 16-bit PGM, values scaled by 65535, top row = largest y.
inline std::string write_map_pgm(const indicator_map& m) {
  const auto& g = m.grid;
  std::string out = "P5\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n65535\n";
  out.reserve(out.size() + 2 * g.size());
  for (std::size_t jj = 0; jj < g.ny; ++jj) {
    const std::size_t j = g.ny - 1 - jj;
    for (std::size_t i = 0; i < g.nx; ++i) {
      const double v = std::clamp(m.at(i, j), 0.0, 1.0);
      const auto level = static_cast<std::uint16_t>(std::lround(v * 65535.0));
      out += static_cast<char>(level >> 8);
      out += static_cast<char>(level & 0xff);
    }
  }
  return out;
}

} // namespace dsm::io
