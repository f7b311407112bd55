#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dsm/asymptotic.hpp"
#include "dsm/io.hpp"

namespace fs = std::filesystem;
using dsm::complex;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("dsm_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

dsm::far_field_tensor sample_tensor() {
  dsm::acquisition_config cfg;
  cfg.wavenumbers = dsm::wavenumbers_from_wavelengths(0.3, 0.7, 3);
  cfg.observation_count = 9;
  cfg.incident_angles = {0.1, 2.0};
  return dsm::simulate_asymptotic(dsm::reference_scene(), cfg, dsm::asymptotic_order::second);
}

dsm::indicator_map sample_map() {
  dsm::indicator_map m;
  m.grid = {-1.5, 0.25, -0.3, 1.0 / 3.0, 7, 5};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t p = 0; p < m.grid.size(); ++p) m.values.push_back(u(rng));
  m.values[3] = 1.0;
  m.values[4] = 0.0;
  return m;
}

} // namespace

TEST(Numbers, FormatRoundTrips) {
  for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, 6.02e23, -2.5e-7}) {
    EXPECT_EQ(dsm::io::parse_number(dsm::io::format_number(v)), v);
  }
  EXPECT_THROW(dsm::io::parse_number("1.0x"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::parse_number(""), dsm::io::format_error);
}

TEST(SceneFile, RoundTrip) {
  const auto s = dsm::reference_scene(0.05, 0.03, 0.01);
  const auto text = dsm::io::write_scene(s);
  const auto back = dsm::io::read_scene(text);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t m = 0; m < 3; ++m) {
    EXPECT_EQ(back.cracks[m].center, s.cracks[m].center);
    EXPECT_EQ(back.cracks[m].half_length, s.cracks[m].half_length);
    EXPECT_EQ(back.cracks[m].rotation, s.cracks[m].rotation);
  }
  EXPECT_EQ(dsm::io::write_scene(back), text);
  EXPECT_EQ(dsm::io::read_scene(dsm::io::write_scene(dsm::scene{})).size(), 0u);
}

TEST(SceneFile, BundledSampleIsTheReferenceScene) {
  const auto text = dsm::io::read_file(fs::path(DSM_DATA_DIR) / "reference_scene.csv");
  const auto s = dsm::io::read_scene(text);
  const auto ref = dsm::reference_scene();
  ASSERT_EQ(s.size(), ref.size());
  for (std::size_t m = 0; m < s.size(); ++m) {
    EXPECT_EQ(s.cracks[m].center, ref.cracks[m].center);
    EXPECT_EQ(s.cracks[m].half_length, ref.cracks[m].half_length);
    EXPECT_EQ(s.cracks[m].rotation, ref.cracks[m].rotation);
  }
  EXPECT_EQ(dsm::io::write_scene(s), text);
}

TEST(SceneFile, Errors) {
  EXPECT_THROW(dsm::io::read_scene("x,y,l,a\n0,0,1,0\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_scene("center_x,center_y,half_length,rotation_radians\n0,0,1\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_scene("center_x,center_y,half_length,rotation_radians\n0,0,-1,0\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_scene("center_x,center_y,half_length,rotation_radians\n0,zero,1,0\n"), dsm::io::format_error);
  // Comments and blank lines are ignored anywhere.
  EXPECT_EQ(dsm::io::read_scene("# a\n\ncenter_x,center_y,half_length,rotation_radians\n# b\n0,0,1,0\n").size(), 1u);
}

TEST(TensorFile, RoundTrip) {
  const auto t = sample_tensor();
  const auto text = dsm::io::write_tensor(t);
  const auto back = dsm::io::read_tensor(text);
  EXPECT_EQ(back.values(), t.values());
  EXPECT_EQ(back.config().wavenumbers, t.config().wavenumbers);
  EXPECT_EQ(back.config().incident_angles, t.config().incident_angles);
  EXPECT_EQ(back.observations(), 9u);
  EXPECT_EQ(dsm::io::write_tensor(back), text);
}

TEST(TensorFile, RowsInAnyOrder) {
  const std::string text =
      "F 1\nL 1\nN 8\nwavenumbers 2\nincident_angles 0\nf l n re im\n"
      "0 0 7 1 2\n0 0 0 3 4\n0 0 1 0 0\n0 0 2 0 0\n0 0 3 0 0\n0 0 4 0 0\n0 0 5 0 0\n0 0 6 0 0\n";
  const auto t = dsm::io::read_tensor(text);
  EXPECT_EQ(t.at(0, 0, 7), complex(1, 2));
  EXPECT_EQ(t.at(0, 0, 0), complex(3, 4));
}

TEST(TensorFile, Errors) {
  const std::string head = "F 1\nL 1\nN 8\nwavenumbers 2\nincident_angles 0\nf l n re im\n";
  std::string rows;
  for (int n = 0; n < 8; ++n) rows += "0 0 " + std::to_string(n) + " 0 0\n";
  EXPECT_NO_THROW(dsm::io::read_tensor(head + rows));
  EXPECT_THROW(dsm::io::read_tensor(head + rows + "0 0 1 0 0\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_tensor(head), dsm::io::format_error);
  std::string dup = rows;
  dup.replace(dup.find("0 0 7"), 5, "0 0 6");
  EXPECT_THROW(dsm::io::read_tensor(head + dup), dsm::io::format_error);
  std::string bad = rows;
  bad.replace(bad.find("0 0 7"), 5, "0 0 8");
  EXPECT_THROW(dsm::io::read_tensor(head + bad), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_tensor("F 1\nL 1\nN 4\nwavenumbers 2\nincident_angles 0\nf l n re im\n"),
               dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_tensor("F 2\nL 1\nN 8\nwavenumbers 2\nincident_angles 0\nf l n re im\n" + rows),
               dsm::io::format_error);
  std::string nonfinite = rows;
  nonfinite.replace(nonfinite.find("0 0 3 0 0"), 9, "0 0 3 nan 0");
  EXPECT_THROW(dsm::io::read_tensor(head + nonfinite), dsm::io::format_error);
}

TEST(MapFile, RoundTrip) {
  const auto m = sample_map();
  const auto text = dsm::io::write_map_csv(m);
  const auto back = dsm::io::read_map_csv(text);
  EXPECT_EQ(back.grid, m.grid);
  EXPECT_EQ(back.values, m.values);
  EXPECT_FALSE(back.zero_map);
  EXPECT_EQ(dsm::io::write_map_csv(back), text);

  dsm::indicator_map z{m.grid, std::vector<double>(m.grid.size(), 0.0), true};
  EXPECT_TRUE(dsm::io::read_map_csv(dsm::io::write_map_csv(z)).zero_map);
}

TEST(MapFile, RowsAreAscendingY) {
  const auto m = sample_map();
  const auto lines = dsm::io::data_lines(dsm::io::write_map_csv(m));
  ASSERT_EQ(lines.size(), 2 + m.grid.ny);
  const auto first_row = dsm::io::split(lines[2], ',');
  for (std::size_t i = 0; i < m.grid.nx; ++i) EXPECT_EQ(dsm::io::parse_number(first_row[i]), m.at(i, 0));
}

TEST(MapFile, Errors) {
  EXPECT_THROW(dsm::io::read_map_csv("nope\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_map_csv("x_min,x_max,y_min,y_max,nx,ny,zero_map\n0,1,0,1,2,2,0\n1,1\n"), dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_map_csv("x_min,x_max,y_min,y_max,nx,ny,zero_map\n0,1,0,1,2,2,0\n1,1\n1\n"),
               dsm::io::format_error);
  EXPECT_THROW(dsm::io::read_map_csv("x_min,x_max,y_min,y_max,nx,ny,zero_map\n1,0,0,1,2,2,0\n1,1\n1,1\n"),
               dsm::io::format_error);
}

TEST(Pgm, HeaderAndPixels) {
  dsm::indicator_map m;
  m.grid = {0, 1, 0, 1, 3, 2};
  m.values = {0.0, 0.5, 1.0, 0.25, 0.75, 1.0};
  const auto pgm = dsm::io::write_map_pgm(m);
  const std::string header = "P5\n3 2\n65535\n";
  ASSERT_EQ(pgm.size(), header.size() + 12);
  EXPECT_EQ(pgm.substr(0, header.size()), header);
  auto pixel = [&](std::size_t k) {
    const auto hi = static_cast<unsigned char>(pgm[header.size() + 2 * k]);
    const auto lo = static_cast<unsigned char>(pgm[header.size() + 2 * k + 1]);
    return hi * 256u + lo;
  };
  // Top image row is the largest y, i.e. grid row j = 1.
  EXPECT_EQ(pixel(0), static_cast<unsigned>(std::lround(0.25 * 65535)));
  EXPECT_EQ(pixel(1), static_cast<unsigned>(std::lround(0.75 * 65535)));
  EXPECT_EQ(pixel(2), 65535u);
  EXPECT_EQ(pixel(3), 0u);
  EXPECT_EQ(pixel(4), static_cast<unsigned>(std::lround(0.5 * 65535)));
  EXPECT_EQ(pixel(5), 65535u);
}

TEST(AtomicWrite, ReplacesAndLeavesNoTemporary) {
  const auto dir = scratch_dir();
  const auto path = dir / "out.txt";
  dsm::io::write_atomic(path, "first");
  dsm::io::write_atomic(path, "second");
  EXPECT_EQ(dsm::io::read_file(path), "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  EXPECT_THROW(dsm::io::write_atomic(dir / "missing" / "x.txt", "x"), std::runtime_error);
  EXPECT_THROW(dsm::io::read_file(dir / "missing.txt"), std::runtime_error);
  fs::remove_all(dir);
}
