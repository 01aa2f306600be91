#include <gtest/gtest.h>

#include <cctype>

#include "property_checks.hpp"

using namespace egv::props;

namespace egv::props {
void PrintTo(const Property& p, std::ostream* os) { *os << p.name; }
}  // namespace egv::props

class Properties : public ::testing::TestWithParam<Property> {};

TEST_P(Properties, HoldOnEveryInstance) {
  Gen g(GetParam().seed);
  for (int i = 0; i < kInstances; ++i) ASSERT_TRUE(GetParam().check(g)) << "instance " << i;
}

INSTANTIATE_TEST_SUITE_P(Random, Properties, ::testing::ValuesIn(all()),
                         [](const ::testing::TestParamInfo<Property>& info) {
                           std::string n;
                           for (char c : info.param.name) n += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return n;
                         });
