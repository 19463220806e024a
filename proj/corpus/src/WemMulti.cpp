#include "Foo.h"
#include "Counter.h"
#include "Chain.h"

class WemMulti : public Foo, public Counter, public Chain {
public:
    std::string getName() { return "WemMulti"; }

    void run() { Chain::run(); }
};
