#include <cstdio>

int main() {
  std::puts("klrwb: placeholder");
  return 0;
}
