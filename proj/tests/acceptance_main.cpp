#include "orbits/selftest.hpp"

int main() { return orbits::print_acceptance(orbits::run_acceptance()) ? 0 : 1; }
