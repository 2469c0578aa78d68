#include <gtest/gtest.h>

#include <iostream>

#include "support.hpp"

int main(int argc, char** argv) {
  if (!qtest::consume_seed_flag(argc, argv)) {
    std::cerr << "usage: --seed <unsigned integer>\n";
    return 2;
  }
  ::testing::InitGoogleTest(&argc, argv);
  std::cout << "seed: " << qtest::seed() << "\n";
  return RUN_ALL_TESTS();
}
