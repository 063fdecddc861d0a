#include "sturm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

void check_size(int n, const EnumerateOptions& options) {
  if (n < 1 || n % 2 == 0) throw Error(Errc::invalid_argument, "size " + std::to_string(n) + " must be odd and positive");
  if (n > options.bound) {
    throw Error(Errc::bound_exceeded,
                "size " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(options.bound));
  }
}

Engine resolve(int n, Engine engine) {
  if (engine == Engine::automatic) return n <= 7 ? Engine::filter : Engine::backtrack;
  return engine;
}

std::vector<Permutation> run_filter(int n) {
  if (n > kFilterEngineLimit) {
    throw Error(Errc::bound_exceeded,
                "filter engine is limited to n <= " + std::to_string(kFilterEngineLimit));
  }
  std::vector<Permutation> out;
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  do {
    Permutation p(line);
    if (is_sturm(p)) out.push_back(std::move(p));
  } while (n > 2 && std::next_permutation(line.begin() + 1, line.end() - 1));
  return out;
}

// Depth-first construction of the axis sequence, one position at a time.
// Arcs are opened and closed on a stack per side, so a crossing is rejected
// as soon as its second endpoint is placed; Morse numbers are extended along
// the longest placed prefix of labels 1, 2, ... and must stay non-negative.
class Builder {
 public:
  explicit Builder(int n)
      : n_(n),
        line_(static_cast<std::size_t>(n + 1), 0),
        pos_(static_cast<std::size_t>(n + 2), 0),
        morse_(static_cast<std::size_t>(n + 1), 0) {}

  // Runs the subtree with `second` at axis position 2 (ignored for n < 3).
  void run(int second, std::vector<Permutation>& out) {
    out_ = &out;
    if (!place(1, 1)) return;
    if (n_ == 1) {
      emit();
    } else if (place(2, n_ == 3 ? 2 : second)) {
      descend(3);
      unplace(2);
    }
    unplace(1);
  }

 private:
  struct Undo {
    int prefix;
    int pushed[2];
    int popped[2];
  };

  static int side(int step) { return step % 2; }

  void descend(Position k) {
    if (k > n_) {
      emit();
      return;
    }
    if (k == n_) {
      if (place(k, n_)) {
        descend(k + 1);
        unplace(k);
      }
      return;
    }
    for (Label l = 2; l < n_; ++l) {
      if (pos_[static_cast<std::size_t>(l)] != 0) continue;
      if (place(k, l)) {
        descend(k + 1);
        unplace(k);
      }
    }
  }

  bool place(Position k, Label l) {
    Undo u{prefix_, {0, 0}, {0, 0}};
    line_[static_cast<std::size_t>(k)] = l;
    pos_[static_cast<std::size_t>(l)] = k;
    bool ok = true;
    for (int step : {l - 1, l}) {
      if (step < 1 || step >= n_) continue;
      const Label other = step == l ? l + 1 : l - 1;
      auto& stack = stacks_[side(step)];
      if (pos_[static_cast<std::size_t>(other)] == 0) {
        stack.push_back(step);
        u.pushed[side(step)] = step;
      } else if (!stack.empty() && stack.back() == step) {
        stack.pop_back();
        u.popped[side(step)] = step;
      } else {
        ok = false;
      }
    }
    if (ok) {
      while (prefix_ < n_ && pos_[static_cast<std::size_t>(prefix_ + 1)] != 0) {
        const Label q = prefix_;
        if (q >= 1) {
          const int alternation = q % 2 == 1 ? 1 : -1;
          const int d = pos_[static_cast<std::size_t>(q + 1)] - pos_[static_cast<std::size_t>(q)];
          const int next = morse_[static_cast<std::size_t>(q)] + alternation * ((d > 0) - (d < 0));
          if (next < 0) {
            ok = false;
            break;
          }
          morse_[static_cast<std::size_t>(q + 1)] = next;
        }
        ++prefix_;
      }
    }
    undo_.push_back(u);
    if (!ok) unplace(k);
    return ok;
  }

  void unplace(Position k) {
    const Undo u = undo_.back();
    undo_.pop_back();
    for (int s = 0; s < 2; ++s) {
      if (u.pushed[s] != 0) stacks_[s].pop_back();
      if (u.popped[s] != 0) stacks_[s].push_back(u.popped[s]);
    }
    prefix_ = u.prefix;
    const Label l = line_[static_cast<std::size_t>(k)];
    pos_[static_cast<std::size_t>(l)] = 0;
    line_[static_cast<std::size_t>(k)] = 0;
  }

  void emit() { out_->emplace_back(std::vector<int>(line_.begin() + 1, line_.end())); }

  int n_;
  std::vector<int> line_;   // line_[k] = label at position k
  std::vector<int> pos_;    // pos_[l] = position of label l, 0 if unplaced
  std::vector<int> morse_;  // valid for labels 1..prefix_
  int prefix_ = 0;
  std::vector<int> stacks_[2];
  std::vector<Undo> undo_;
  std::vector<Permutation>* out_ = nullptr;
};

std::vector<Permutation> run_backtrack(int n, unsigned threads) {
  std::vector<int> seconds;
  if (n <= 3) {
    seconds.push_back(0);
  } else {
    for (Label l = 2; l < n; ++l) seconds.push_back(l);
  }
  std::vector<std::vector<Permutation>> parts(seconds.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(seconds.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seconds.size(); i = next++) Builder(n).run(seconds[i], parts[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<Permutation> out;
  for (auto& part : parts) std::ranges::move(part, std::back_inserter(out));
  std::ranges::sort(out);
  return out;
}

}  // namespace

std::vector<Permutation> enumerate_sturm(int n, const EnumerateOptions& options) {
  check_size(n, options);
  return resolve(n, options.engine) == Engine::filter ? run_filter(n) : run_backtrack(n, options.threads);
}

std::size_t for_each_sturm(int n, const std::function<void(const Permutation&)>& visit,
                           const EnumerateOptions& options) {
  const std::vector<Permutation> all = enumerate_sturm(n, options);
  for (const Permutation& p : all) visit(p);
  return all.size();
}

}  // namespace sturm
