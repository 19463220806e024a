package wem;

import app.Counter;
import app.Foo;
import base.chain.ChainMgm;
import base.chain.Link;

// Hand-converted: Foo stays the superclass, Counter becomes a member and the
// chain base becomes the Link interface.
public class WemMulti extends Foo implements Link {
    protected Counter m_oCounter = new Counter();

    public String getName() {
        return "WemMulti";
    }

    public void run(ChainMgm ChainMgm) {
        ChainMgm.runNext();
    }
}
