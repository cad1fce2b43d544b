#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "thyp/constructors.hpp"
#include "thyp/errors.hpp"
#include "thyp/io.hpp"

using namespace thyp;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("representation round trip") {
  Representation rep = build_rep({1, 2, 1, {1, -1}, 7});
  Json j = rep_to_json(rep);
  CHECK(j["meta"]["euler"] == 1);
  Representation back = rep_from_json(Json::parse(j.dump()));
  CHECK(back.surface() == rep.surface());
  for (std::size_t i = 0; i < rep.free_images().size(); ++i) {
    CHECK(max_abs_diff(back.free_images()[i].rep(), rep.free_images()[i].rep()) == 0);
  }
  CHECK(back.seed == rep.seed);
  CHECK(rep_to_json(back).dump() == j.dump());
}

TEST_CASE("representation parse errors") {
  Representation rep = build_rep({0, 4, 1, {1, 1, 1, -1}, 1});
  Json j = rep_to_json(rep);

  Json bad_cp = j;
  bad_cp["images"]["c4"] = matrix_to_json(rep.peripheral(4) * ProjectiveMatrix::from_matrix(upper_unipotent(1e-3)));
  CHECK(code_of([&] { rep_from_json(bad_cp); }) == ErrorCode::RelatorViolated);

  Json unknown = j;
  unknown["images"]["a1"] = Json::array({1, 0, 0, 1});
  CHECK(code_of([&] { rep_from_json(unknown); }) == ErrorCode::UnknownGenerator);

  Json missing = j;
  missing["images"].erase("c2");
  CHECK(code_of([&] { rep_from_json(missing); }) == ErrorCode::ParseError);

  Json no_cp = j;
  no_cp["images"].erase("c4");
  CHECK_NOTHROW(rep_from_json(no_cp));

  Json det = j;
  det["images"]["c1"] = Json::array({2, 0, 0, 2});
  CHECK(code_of([&] { rep_from_json(det); }) == ErrorCode::NonUnitDeterminant);
}

TEST_CASE("cover element and class json") {
  CoverElement x{ProjectiveMatrix::from_matrix(upper_unipotent(1)), -2};
  CoverElement y = cover_element_from_json(cover_element_to_json(x));
  CHECK(y.lift_index == -2);
  CHECK(projective_distance(x.base, y.base) == 0);
  for (CoverClass c : {hyp(-1), par_plus(2), par_minus(0), ell(-3), center(1)}) {
    CHECK(cover_class_from_json(cover_class_to_json(c)) == c);
  }
  CHECK(code_of([] { cover_class_from_json(Json{{"tag", "Ell"}, {"n", 0}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cover_class_from_json(Json{{"tag", "Foo"}, {"n", 0}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(Json::array({1, 2, 3})); }) == ErrorCode::ParseError);
}

TEST_CASE("atomic write") {
  auto dir = std::filesystem::temp_directory_path() / "thyp_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "out.json").string();
  write_file_atomic(path, "{\"a\": 1}\n");
  write_file_atomic(path, "{\"a\": 2}\n");
  CHECK(read_json_file(path)["a"] == 2);
  std::size_t files = 0;
  for ([[maybe_unused]] auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
  CHECK(code_of([] { read_json_file("/nonexistent/thyp.json"); }) == ErrorCode::ParseError);
}
