#include "lie3/parallel.hpp"

namespace lie3 {

namespace {
Exec g_exec = Exec::parallel;
}

Exec default_exec() { return g_exec; }
void set_default_exec(Exec e) { g_exec = e; }

}  // namespace lie3
