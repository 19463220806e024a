package base.chain;

import java.util.ArrayList;
import java.util.LinkedHashMap;
import java.util.List;
import java.util.Map;

/**
 * Registry of link classes. Every generated link is registered once at start
 * up, for example {@code builder.register(new WemChainStep());}; chains are
 * then assembled by name from configuration.
 */
public class ChainBuilder {
    private final Map<String, Link> known = new LinkedHashMap<>();

    public void register(Link link) {
        known.put(link.getName(), link);
    }

    public ChainMgm build(List<String> names) {
        List<Link> links = new ArrayList<>();
        for (String n : names) {
            Link l = known.get(n);
            if (l == null) {
                throw new IllegalArgumentException("unknown link " + n);
            }
            links.add(l);
        }
        return new ChainMgm(links);
    }
}
