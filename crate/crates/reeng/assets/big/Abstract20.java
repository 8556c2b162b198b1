public abstract class Abstract20 extends State {
}
