#include <iostream>
#include "Chain.h"
#include "Foo.h"

class WemChainStep : public Chain, public Foo {
public:
    std::string getName() { return "WemChainStep"; }

protected:
    virtual void run() {
        std::cout << "step " << getFooValue() << std::endl;
        Chain::run();
    }
};
