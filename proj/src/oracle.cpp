#include "penney/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <thread>

#include "penney/errors.hpp"
#include "penney/solver.hpp"

namespace penney {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Accumulator {
  std::uint64_t truncated = 0;
  std::vector<std::uint64_t> wins, wait_sum;
  std::vector<unsigned __int128> wait_sq_sum;

  explicit Accumulator(std::size_t m) : wins(m), wait_sum(m), wait_sq_sum(m) {}

  void merge(const Accumulator& o) {
    truncated += o.truncated;
    for (std::size_t i = 0; i < wins.size(); ++i) {
      wins[i] += o.wins[i];
      wait_sum[i] += o.wait_sum[i];
      wait_sq_sum[i] += o.wait_sq_sum[i];
    }
  }
};

void run_trials(const MatchAutomaton& automaton, const LetterSampler& sampler, const SimConfig& cfg,
                std::uint64_t first, std::uint64_t last, Accumulator& acc) {
  for (std::uint64_t t = first; t < last; ++t) {
    LetterStream stream(sampler, cfg.seed, t);
    std::size_t state = MatchAutomaton::kRoot;
    bool done = false;
    for (std::uint64_t step = 1; step <= cfg.max_steps; ++step) {
      state = automaton.next(state, stream.next());
      if (const auto hit = automaton.accepting(state)) {
        acc.wins[*hit] += 1;
        acc.wait_sum[*hit] += step;
        acc.wait_sq_sum[*hit] += static_cast<unsigned __int128>(step) * step;
        done = true;
        break;
      }
    }
    if (!done) ++acc.truncated;
  }
}

}  // namespace

MatchAutomaton::MatchAutomaton(const PatternSystem& sys) : alphabet_size_(sys.dist().alphabet().size()) {
  // Trie first; kNone marks a missing child.
  std::vector<std::size_t> child(alphabet_size_, kNone);
  accept_.emplace_back();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    std::size_t node = kRoot;
    for (std::size_t letter : sys.encoded(i)) {
      std::size_t& slot = child[node * alphabet_size_ + letter];
      if (slot == kNone) {
        slot = accept_.size();
        accept_.emplace_back();
        child.resize(child.size() + alphabet_size_, kNone);
      }
      node = child[node * alphabet_size_ + letter];
    }
    accept_[node] = i;
  }

  // Breadth-first failure links; delta is the completed goto function.
  delta_.assign(child.size(), kRoot);
  std::vector<std::size_t> fail(accept_.size(), kRoot);
  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < alphabet_size_; ++c) {
    const std::size_t s = child[c];
    if (s != kNone) {
      delta_[c] = s;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (!accept_[u]) accept_[u] = accept_[fail[u]];
    for (std::size_t c = 0; c < alphabet_size_; ++c) {
      const std::size_t v = child[u * alphabet_size_ + c];
      if (v == kNone) {
        delta_[u * alphabet_size_ + c] = delta_[fail[u] * alphabet_size_ + c];
      } else {
        fail[v] = delta_[fail[u] * alphabet_size_ + c];
        delta_[u * alphabet_size_ + c] = v;
        queue.push_back(v);
      }
    }
  }
}

DpTable dp_distribution(const PatternSystem& sys, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("dp_distribution: n_max must be at least 1");
  const MatchAutomaton automaton(sys);
  const Distribution& dist = sys.dist();
  const std::size_t m = sys.size();

  DpTable table;
  table.first_hits.assign(n_max + 1, std::vector<Rational>(m));
  table.tails.assign(n_max + 1, Rational());
  table.tails[0] = Rational(1);

  std::vector<Rational> live(automaton.state_count());
  live[MatchAutomaton::kRoot] = Rational(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Rational> next(automaton.state_count());
    for (std::size_t s = 0; s < live.size(); ++s) {
      if (live[s].is_zero()) continue;
      for (std::size_t c = 0; c < dist.alphabet().size(); ++c) {
        if (dist.prob(c).is_zero()) continue;
        const Rational mass = live[s] * dist.prob(c);
        const std::size_t t = automaton.next(s, c);
        if (const auto hit = automaton.accepting(t))
          table.first_hits[n][*hit] += mass;
        else
          next[t] += mass;
      }
    }
    live = std::move(next);
    Rational q;
    for (const auto& x : live) q += x;
    table.tails[n] = q;
  }
  return table;
}

LetterSampler::LetterSampler(const Distribution& dist) {
  const mpz_class two64 = mpz_class(1) << 64;
  Rational cumulative;
  for (const auto& p : dist.probs()) {
    cumulative += p;
    const mpq_class scaled = cumulative.value() * two64;
    const mpz_class floor_val = scaled.get_num() / scaled.get_den();
    // floor_val <= 2^64, which needs 65 bits.
    const mpz_class hi = floor_val >> 64;
    const mpz_class lo = floor_val - (hi << 64);
    unsigned __int128 v = static_cast<unsigned __int128>(hi.get_ui()) << 64;
    const mpz_class lo_hi = lo >> 32;
    const mpz_class lo_lo = lo - (lo_hi << 32);
    v |= (static_cast<unsigned __int128>(lo_hi.get_ui()) << 32) | lo_lo.get_ui();
    upper_.push_back(v);
  }
}

std::size_t LetterSampler::operator()(std::uint64_t draw) const {
  for (std::size_t k = 0; k < upper_.size(); ++k)
    if (draw < upper_[k]) return k;
  return upper_.size() - 1;  // unreachable: the last bound is 2^64
}

LetterStream::LetterStream(const LetterSampler& sampler, std::uint64_t seed, std::uint64_t trial)
    : sampler_(&sampler), state_(mix64(seed ^ mix64(trial + 0x9E3779B97F4A7C15ULL))) {}

std::size_t LetterStream::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return (*sampler_)(mix64(state_));
}

std::uint64_t default_max_steps(const PatternSystem& sys) {
  std::uint64_t steps = 1000000;
  try {
    const Rational bound = expected_wait(sys) * Rational(100);
    mpz_class c = bound.numerator() / bound.denominator();
    if (!bound.is_integer()) ++c;
    steps = c.fits_ulong_p() ? c.get_ui() : std::numeric_limits<std::uint64_t>::max();
  } catch (const Error&) {
  }
  return std::max<std::uint64_t>(steps, sys.max_length());
}

double SimResult::win_fraction(std::size_t i) const {
  return static_cast<double>(wins[i]) / static_cast<double>(completed());
}

double SimResult::win_fraction_se(std::size_t i) const {
  const double f = win_fraction(i);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(completed()));
}

double SimResult::mean_wait() const {
  std::uint64_t total = 0;
  for (auto w : wait_sum) total += w;
  return static_cast<double>(total) / static_cast<double>(completed());
}

double SimResult::mean_wait_se() const {
  unsigned __int128 sq = 0;
  for (auto w : wait_sq_sum) sq += w;
  const double n = static_cast<double>(completed());
  const double mean = mean_wait();
  const double var = (static_cast<double>(sq) / n - mean * mean) * n / std::max(n - 1.0, 1.0);
  return std::sqrt(std::max(var, 0.0) / n);
}

double SimResult::conditional_mean(std::size_t i) const {
  if (wins[i] == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(wait_sum[i]) / static_cast<double>(wins[i]);
}

double SimResult::conditional_mean_se(std::size_t i) const {
  if (wins[i] == 0) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(wins[i]);
  const double mean = conditional_mean(i);
  const double var =
      (static_cast<double>(wait_sq_sum[i]) / n - mean * mean) * n / std::max(n - 1.0, 1.0);
  return std::sqrt(std::max(var, 0.0) / n);
}

SimResult simulate(const PatternSystem& sys, const SimConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("simulate: trials must be at least 1");
  if (cfg.max_steps < sys.max_length())
    throw std::invalid_argument("simulate: max_steps is shorter than the longest pattern");

  const MatchAutomaton automaton(sys);
  const LetterSampler sampler(sys.dist());
  const std::size_t m = sys.size();

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

  std::vector<Accumulator> parts(workers, Accumulator(m));
  const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
  auto range = [&](unsigned w) {
    const std::uint64_t first = std::min<std::uint64_t>(cfg.trials, chunk * w);
    return std::pair{first, std::min<std::uint64_t>(cfg.trials, first + chunk)};
  };
  if (workers == 1) {
    run_trials(automaton, sampler, cfg, 0, cfg.trials, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const auto [first, last] = range(w);
      pool.emplace_back([&, first, last, w] { run_trials(automaton, sampler, cfg, first, last, parts[w]); });
    }
  }

  Accumulator total(m);
  for (const auto& p : parts) total.merge(p);
  if (total.truncated == cfg.trials)
    throw Error(ErrorKind::AllTrialsTruncated,
                "no trial finished within " + std::to_string(cfg.max_steps) + " steps");

  SimResult r;
  r.trials = cfg.trials;
  r.truncated = total.truncated;
  r.wins = std::move(total.wins);
  r.wait_sum = std::move(total.wait_sum);
  r.wait_sq_sum = std::move(total.wait_sq_sum);
  return r;
}

}  // namespace penney
