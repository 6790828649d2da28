#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bhgame/error.hpp"
#include "bhgame/output.hpp"

using namespace bhgame;

namespace {

ClassificationGrid one_cell(double x, double y, double r) {
  SweepConfig c;
  c.x = {x, x, 1};
  c.y = {y, y, 1};
  c.r = {r, r, 1};
  c.fixed_r = r;
  c.registration = GridRegistration::endpoints;
  return run_sweep(c);
}

std::string csv_of(const ClassificationGrid& g) {
  std::ostringstream os;
  write_grid_csv(g, os);
  return os.str();
}

}  // namespace

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(format_number(0.304), "0.304");
  EXPECT_EQ(format_number(1.0), "1.0");
  EXPECT_EQ(format_number(0.0), "0.0");
  EXPECT_EQ(format_number(-0.99890773123), "-0.998907731");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(1e-12), "1e-12");
}

TEST(GridCsv, SingleCellRow) {
  const ClassificationGrid g = one_cell(0.304, 0.392, 1.0);
  const int code = g.classes[0];
  EXPECT_EQ(csv_of(g), "x,y,r,class_code\n0.304,0.392,1.0," + std::to_string(code) + "\n");
}

TEST(GridCsv, InteriorStateRow) {
  EXPECT_EQ(csv_of(one_cell(0.5, 0.2, 1.8)), "x,y,r,class_code\n0.5,0.2,1.8,3\n");
}

TEST(GridCsv, EmptyGridHasHeaderOnly) {
  ClassificationGrid g;
  g.config.x.steps = 2;
  g.classes.assign(4, kNotComputed);
  EXPECT_EQ(csv_of(g), "x,y,r,class_code\n");
}

TEST(GridCsv, SliceRowsInXMajorOrder) {
  SweepConfig c;
  c.x = {0.0, 1.0, 2};
  c.y = {0.0, 1.0, 2};
  c.r = {2.0, 2.0, 1};
  c.fixed_r = 2.0;
  c.registration = GridRegistration::endpoints;
  const std::string text = csv_of(run_sweep(c));
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> prefixes;
  std::getline(in, line);
  while (std::getline(in, line)) prefixes.push_back(line.substr(0, line.rfind(',')));
  EXPECT_EQ(prefixes, (std::vector<std::string>{"0.0,0.0,2.0", "0.0,1.0,2.0", "1.0,0.0,2.0",
                                                "1.0,1.0,2.0"}));
}

TEST(GridCsv, FileErrorsCarryPath) {
  const ClassificationGrid g = one_cell(0.5, 0.5, 1.0);
  try {
    emit_grid_csv(g, "/nonexistent-dir/out.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
}

TEST(SliceImage, HeaderOrientationAndColors) {
  SweepConfig c;
  c.x = {0.0, 1.0, 3};
  c.y = {0.0, 1.0, 2};
  c.r = {1.8, 1.8, 1};
  c.fixed_r = 1.8;
  ClassificationGrid g;
  g.config = c;
  g.classes = {0, 1, 2, 3, 4, 5};  // x index 0..2, y index 0..1
  std::ostringstream os;
  write_slice_image(g, os);
  const std::string img = os.str();
  const std::string header = "P6\n2 3\n255\n";
  ASSERT_EQ(img.substr(0, header.size()), header);
  ASSERT_EQ(img.size(), header.size() + 18);
  auto pixel = [&](int row, int col) {
    const std::size_t at = header.size() + (row * 2 + col) * 3;
    return Rgb{std::uint8_t(img[at]), std::uint8_t(img[at + 1]), std::uint8_t(img[at + 2])};
  };
  // top row is the largest x
  EXPECT_EQ(pixel(0, 0), (Rgb{0, 200, 0}));
  EXPECT_EQ(pixel(0, 1), (Rgb{255, 255, 255}));
  EXPECT_EQ(pixel(1, 0), (Rgb{120, 0, 0}));
  EXPECT_EQ(pixel(1, 1), (Rgb{128, 128, 128}));
  EXPECT_EQ(pixel(2, 0), (Rgb{0, 0, 0}));
  EXPECT_EQ(pixel(2, 1), (Rgb{220, 0, 0}));
}

TEST(SliceImage, SinglePixel) {
  const ClassificationGrid g = one_cell(0.5, 0.2, 1.8);
  std::ostringstream os;
  write_slice_image(g, os);
  EXPECT_EQ(os.str(), std::string("P6\n1 1\n255\n") + char(128) + char(128) + char(128));
}

TEST(SliceImage, RejectsVolumes) {
  ClassificationGrid g;
  g.config.r = {0.0, 3.0, 4};
  g.config.fixed_r.reset();
  g.classes.assign(g.config.cell_count(), 0);
  std::ostringstream os;
  EXPECT_THROW(write_slice_image(g, os), UsageError);
  EXPECT_THROW(emit_slice_image(g, "/tmp/never.ppm"), UsageError);
}

TEST(Manifest, RecordsConfigurationAndCounts) {
  const ClassificationGrid g = one_cell(0.5, 0.2, 1.8);
  const std::string m = sweep_manifest(g, {"out.csv"});
  for (const char* key : {"\"version\"", "\"fixed_r\": 1.8", "\"registration\": \"endpoints\"",
                          "\"interpolation_normalize\": true", "\"wall_seconds\"",
                          "\"completed\": 1", "\"out.csv\"", "\"alpha\": 1.05"}) {
    EXPECT_NE(m.find(key), std::string::npos) << key;
  }
}

TEST(InfoCurvesCsv, HeaderAndRows) {
  std::ostringstream os;
  write_info_curves_csv(info_curves(EcoParams{}, 2), os);
  EXPECT_EQ(os.str(),
            "n,env_entropy,single_cell,within_species,both_species\n"
            "0,2.0,0.390159695,0.0,0.0\n"
            "1,2.0,0.390159695,0.390159695,0.780319391\n"
            "2,2.0,0.390159695,0.59942657,1.19885314\n");
}
