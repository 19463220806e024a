package base.chain;

/** One configurable step of a processing chain. */
public interface Link {
    String getName();

    /** Does this link's work; call {@code mgm.runNext()} to continue the chain. */
    void run(ChainMgm mgm);
}
