package wem;

import app.Foo;
import base.chain.ChainMgm;
import base.chain.Link;

public class WemChainStep extends Foo implements Link {
    public String getName() {
        return "WemChainStep";
    }

    public void run(ChainMgm ChainMgm) {
        System.out.println(new StringBuilder().append("step ").append(getFooValue()));
        ChainMgm.runNext();
    }
}
