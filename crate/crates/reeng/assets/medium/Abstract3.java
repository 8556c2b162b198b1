public abstract class Abstract3 extends Abstract2 {
}
