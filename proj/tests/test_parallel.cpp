#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "swlab/extension_graph.hpp"
#include "swlab/parallel.hpp"
#include "swlab/verify.hpp"

using namespace swlab;

TEST_CASE("for_each_index visits every index once") {
  for (Exec exec : {Exec::Serial, Exec::Parallel}) {
    std::vector<std::atomic<int>> hits(1000);
    for_each_index(hits.size(), [&](std::size_t i) { ++hits[i]; }, exec);
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("first_failure reports the lowest failing index") {
  const auto check = [](std::size_t i) -> std::optional<std::string> {
    if (i % 97 == 41) return "bad " + std::to_string(i);
    return std::nullopt;
  };
  for (Exec exec : {Exec::Serial, Exec::Parallel}) {
    const auto f = first_failure(5000, check, exec);
    REQUIRE(f.has_value());
    CHECK(f->index == 41);
    CHECK(f->message == "bad 41");
    CHECK_FALSE(first_failure(40, check, exec).has_value());
  }
}

TEST_CASE("exceptions propagate from the parallel path") {
  CHECK_THROWS_AS(for_each_index(
                      100, [](std::size_t i) { if (i == 60) throw std::runtime_error("x"); }, Exec::Parallel),
                  std::runtime_error);
}

TEST_CASE("worker count honours SWLAB_THREADS") {
  setenv("SWLAB_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("SWLAB_THREADS", "0", 1);
  CHECK(worker_count() >= 1);
  unsetenv("SWLAB_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("graph enumeration agrees between serial and parallel kernels") {
  for (const Params& p : {Params(7, 1), Params(7, 2), Params(11, 3)}) {
    const Weight mu = Weight::eta(p.f()) + Weight::eta(p.f()) + Weight::eta(p.f());
    const auto a = enumerate_graph(p, mu, 3, Exec::Serial);
    const auto b = enumerate_graph(p, mu, 3, Exec::Parallel);
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
  }
}

TEST_CASE("suite outcomes agree between serial and parallel kernels") {
  SuiteConfig cfg;
  cfg.p_list = {5, 7};
  cfg.f_list = {1, 2};
  cfg.cases = 500;
  cfg.exec = Exec::Serial;
  const auto serial = run_suite(cfg);
  cfg.exec = Exec::Parallel;
  setenv("SWLAB_THREADS", "4", 1);
  const auto parallel = run_suite(cfg);
  unsetenv("SWLAB_THREADS");
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].check == parallel[i].check);
    CHECK(serial[i].passed == parallel[i].passed);
    CHECK(serial[i].cases == parallel[i].cases);
    CHECK(serial[i].counterexample == parallel[i].counterexample);
  }
}
