#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "angelesco/precision.hpp"

int main(int argc, char** argv) {
    angelesco::set_working_precision(256);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
