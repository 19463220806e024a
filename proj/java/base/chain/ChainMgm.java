package base.chain;

import java.util.ArrayList;
import java.util.List;

/** Runs the links of one chain in order, handing itself to every link. */
public class ChainMgm {
    private final List<Link> links;
    private int next;

    public ChainMgm(List<Link> links) {
        this.links = new ArrayList<>(links);
    }

    public void start() {
        next = 0;
        runNext();
    }

    public void runNext() {
        if (next < links.size()) {
            links.get(next++).run(this);
        }
    }
}
