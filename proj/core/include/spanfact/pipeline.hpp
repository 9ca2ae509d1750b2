#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spanfact/blocks.hpp"
#include "spanfact/config.hpp"
#include "spanfact/digraph.hpp"
#include "spanfact/fixtures.hpp"
#include "spanfact/report.hpp"
#include "spanfact/spanning.hpp"

namespace spanfact {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
};

/// Maps a library exception onto the documented exit codes.
int exit_code_for(const std::exception &e) noexcept;

/**
 * Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
 * results in index order. The first exception thrown is rethrown.
 */
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, std::size_t threads = 0)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        if (!failed.exchange(true))
          error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(count);
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

/// An instance with its factorization family enumerated.
struct Session {
  ExperimentConfig config;
  Instance instance;
  FactorizationFamily family;
  std::optional<Classification> classification;

  const Factorization &factorization(Mask mask) const;
};

Session open_session(const ExperimentConfig &cfg);
void classify(Session &s, bool allow_swap);

ReportTable build_report(const Session &s);
ReportTable validation_report(const Session &s); // empty for the toy family
ReportTable enumerate_report(const Session &s);
ReportTable class_report(const Session &s);
ReportTable distribution_report(const Session &s);
ReportTable classification_summary(const Session &s);

std::vector<ReportTable> blocks_report(const Session &s, Mask mask);

struct TreeSearchReport {
  ReportTable table;
  bool budget_exhausted = false;
};

TreeSearchReport tree_search_report(const Session &s, const std::vector<Mask> &masks,
                                    const TreeSearchOptions &opts, std::size_t threads = 0);

enum class SpanningMethod { Blocks, Addressing };
SpanningMethod parse_spanning_method(std::string_view text);

ReportTable spanning_report(const Session &s, Mask mask, SpanningMethod method);

/// Checks a word list both as a sharply transitive set and as a relocatable tree.
ReportTable verify_report(const Session &s, Mask mask, const std::vector<Word> &words);

struct PipelineResult {
  std::vector<ReportTable> tables;
  bool budget_exhausted = false;
};

/// build, enumerate, then each analysis enabled in the config.
PipelineResult run_pipeline(const ExperimentConfig &cfg);

} // namespace spanfact
