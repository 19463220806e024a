package wem;

// MANUAL: unresolved base classes: Foo Counter Chain
public class WemMulti {
    public String getName() {
        return "WemMulti";
    }

    public void run() {
        super.run();
    }
}
