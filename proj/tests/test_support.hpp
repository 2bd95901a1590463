#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "coxconv/coxconv.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(COXCONV_FIXTURES) + "/" + name; }

inline coxconv::Json read_fixture(const std::string& name) {
  std::ifstream in(fixture(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return coxconv::Json::parse(ss.str());
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  coxconv::Rational rational(long num_bound = 9, long den_bound = 5) {
    return coxconv::ratio(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }
  template <class Tag>
  coxconv::BasicVector<Tag> vec(std::size_t dim) {
    coxconv::BasicVector<Tag> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational();
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testing_support
