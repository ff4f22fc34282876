#include "mzvlab/rings.hpp"

#include <cstdio>

int main() {
  std::puts("mzvlab: not wired up yet");
  return 1;
}
