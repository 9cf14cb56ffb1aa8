#include <iostream>

int main() {
  std::cout << "superring\n";
  return 0;
}
