#include "ellcy/logseries.hpp"

#include <stdexcept>

namespace ellcy {

LogSeries LogSeries::from_plain(const Series2& f) { return term(f, 0, 0); }

LogSeries LogSeries::term(const Series2& f, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("LogSeries::term: negative log degree");
  LogSeries r(f.caps());
  if (!f.is_zero()) r.parts_[{p, q}] = f;
  return r;
}

Series2 LogSeries::part(int p, int q) const {
  auto it = parts_.find({p, q});
  if (it == parts_.end()) return Series2(caps_);
  return it->second;
}

void LogSeries::set_part(int p, int q, const Series2& f) {
  if (!(f.caps() == caps_)) throw std::invalid_argument("LogSeries::set_part: caps mismatch");
  if (f.is_zero())
    parts_.erase({p, q});
  else
    parts_[{p, q}] = f;
}

bool LogSeries::is_zero() const { return parts_.empty(); }

int LogSeries::max_logdeg(int axis) const {
  int m = 0;
  for (const auto& [key, f] : parts_)
    m = std::max(m, axis == 1 ? key.first : key.second);
  return m;
}

void LogSeries::drop_zero() {
  for (auto it = parts_.begin(); it != parts_.end();)
    it = it->second.is_zero() ? parts_.erase(it) : std::next(it);
}

LogSeries LogSeries::operator+(const LogSeries& o) const {
  LogSeries r = *this;
  for (const auto& [key, f] : o.parts_) {
    auto it = r.parts_.find(key);
    if (it == r.parts_.end())
      r.parts_[key] = f;
    else
      it->second = it->second + f;
  }
  r.drop_zero();
  return r;
}

LogSeries LogSeries::operator-(const LogSeries& o) const { return *this + o * Rat(-1); }

LogSeries LogSeries::operator*(const LogSeries& o) const {
  LogSeries r(caps_);
  for (const auto& [ka, fa] : parts_)
    for (const auto& [kb, fb] : o.parts_) {
      std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      Series2 prod = fa * fb;
      auto it = r.parts_.find(key);
      if (it == r.parts_.end())
        r.parts_[key] = prod;
      else
        it->second = it->second + prod;
    }
  r.drop_zero();
  return r;
}

LogSeries LogSeries::operator*(const Rat& s) const {
  LogSeries r(caps_);
  if (s == 0) return r;
  for (const auto& [key, f] : parts_) r.parts_[key] = f * s;
  return r;
}

bool LogSeries::operator==(const LogSeries& o) const {
  return (*this - o).is_zero();
}

LogSeries LogSeries::theta(int axis) const {
  LogSeries r(caps_);
  for (const auto& [key, f] : parts_) {
    auto [p, q] = key;
    r = r + term(f.theta(axis), p, q);
    int deg = axis == 1 ? p : q;
    if (deg > 0) {
      auto lowered = axis == 1 ? std::pair{p - 1, q} : std::pair{p, q - 1};
      r = r + term(f * Rat(deg), lowered.first, lowered.second);
    }
  }
  return r;
}

LogSeries LogSeries::shift(int k1, int k2) const {
  LogSeries r(caps_);
  for (const auto& [key, f] : parts_) r.set_part(key.first, key.second, f.shift(k1, k2));
  return r;
}

}  // namespace ellcy
