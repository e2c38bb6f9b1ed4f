#include <lhcert/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  return lhcert::cmd_dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
