#include "evcop/csv.hpp"
#include "evcop/random.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace evcop;

TEST_CASE("knots round-trip", "[csv]")
{
  std::vector<Knot> const knots{{0.0, 1.0}, {0.3, 0.9}, {0.7, 0.8}, {1.0, 1.0}};
  std::ostringstream out;
  write_knots(out, knots);
  CHECK(out.str().starts_with("t,A\n"));
  std::istringstream in(out.str());
  auto const back = read_knots(in);
  REQUIRE(back.size() == knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    CHECK(back[i].t == knots[i].t);
    CHECK(back[i].value == knots[i].value);
  }
}

TEST_CASE("batch round-trip is bit-exact", "[csv][property]")
{
  Rng rng(4);
  SampleBatch batch;
  for (int i = 0; i < 500; ++i) {
    batch.u.push_back(rng.uniform());
    batch.v.push_back(rng.uniform() * 1e-300);
  }
  std::ostringstream out;
  write_batch(out, batch);
  CHECK(out.str().find('\r') == std::string::npos);
  std::istringstream in(out.str());
  auto const back = read_batch(in);
  CHECK(back.u == batch.u);
  CHECK(back.v == batch.v);
}

TEST_CASE("reader accepts tabs and CRLF", "[csv]")
{
  std::istringstream in("u\tv\r\n0.25\t0.5\r\n 0.75 \t 1 \r\n");
  auto const batch = read_batch(in);
  CHECK(batch.u == std::vector<double>{0.25, 0.75});
  CHECK(batch.v == std::vector<double>{0.5, 1.0});
}

TEST_CASE("reader errors", "[csv]")
{
  std::istringstream bad_header("x,y\n0.1,0.2\n");
  CHECK_THROWS_AS(read_batch(bad_header), ParseError);
  std::istringstream bad_number("u,v\n0.1,abc\n");
  CHECK_THROWS_AS(read_batch(bad_number), ParseError);
  std::istringstream short_row("t,A\n0.1\n");
  CHECK_THROWS_AS(read_knots(short_row), ParseError);
  std::istringstream empty("");
  CHECK(read_batch(empty).size() == 0);
}

TEST_CASE("format_real: examples", "[csv]")
{
  CHECK(format_real(0.5) == "0.5");
  CHECK(std::stod(format_real(0.1)) == 0.1);
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
